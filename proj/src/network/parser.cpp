#include "crn/network/parser.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "crn/errors.hpp"

namespace crn {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct RawTerm {
  std::string species;
  unsigned coeff;
};

struct RawReaction {
  std::vector<RawTerm> reactant;
  std::vector<RawTerm> product;
  std::optional<std::string> label;
  std::size_t line;
  std::size_t column;
};

// Cursor over one statement (a line segment between separators).
class StatementParser {
 public:
  StatementParser(std::string_view text, std::size_t line, std::size_t column0)
      : text_(text), line_(line), column0_(column0) {}

  void parse(std::vector<RawReaction>& out) {
    std::vector<RawTerm> left = complex();
    std::size_t start_col = column();
    bool any = false;
    for (;;) {
      skip_space();
      if (at_end()) break;
      start_col = column();
      if (consume("->")) {
        auto label = optional_label();
        std::vector<RawTerm> right = complex();
        out.push_back({left, right, label, line_, start_col});
        left = std::move(right);
      } else if (consume("<=>")) {
        auto forward = optional_label();
        std::optional<std::string> backward;
        if (forward) {
          backward = optional_label();
          if (!backward) fail("reversible reaction needs both labels '[forward][backward]'");
        }
        std::vector<RawTerm> right = complex();
        out.push_back({left, right, forward, line_, start_col});
        out.push_back({right, left, backward, line_, start_col});
        left = std::move(right);
      } else {
        fail("expected '->' or '<=>'");
      }
      any = true;
    }
    if (!any) fail("expected '->' or '<=>'");
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, column()); }
  std::size_t column() const { return column0_ + pos_; }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  std::string identifier() {
    if (!ident_start(peek())) fail("expected a species name");
    const std::size_t start = pos_;
    while (!at_end() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::optional<std::string> optional_label() {
    skip_space();
    if (peek() != '[') return std::nullopt;
    ++pos_;
    skip_space();
    if (!ident_start(peek())) fail("expected a rate symbol");
    std::string name = identifier();
    skip_space();
    if (peek() != ']') fail("expected ']'");
    ++pos_;
    return name;
  }

  std::vector<RawTerm> complex() {
    skip_space();
    if (at_end()) fail("expected a complex");
    if (peek() == '0') {
      std::size_t look = pos_ + 1;
      if (look >= text_.size() || !std::isalnum(static_cast<unsigned char>(text_[look])) ||
          text_[look] == '.') {
        if (look < text_.size() && text_[look] == '.') fail("non-integer stoichiometric coefficient");
        ++pos_;
        return {};
      }
    }
    std::vector<RawTerm> terms;
    for (;;) {
      skip_space();
      if (peek() == '-') fail("negative stoichiometric coefficient");
      unsigned coeff = 1;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (peek() == '.' || peek() == '/') {
          pos_ = start;
          fail("non-integer stoichiometric coefficient");
        }
        const std::string digits(text_.substr(start, pos_ - start));
        if (digits.size() > 6) {
          pos_ = start;
          fail("stoichiometric coefficient too large");
        }
        coeff = static_cast<unsigned>(std::stoul(digits));
        if (coeff == 0) {
          pos_ = start;
          fail("zero stoichiometric coefficient");
        }
        skip_space();
      }
      terms.push_back({identifier(), coeff});
      skip_space();
      if (peek() == '+') {
        ++pos_;
        continue;
      }
      return terms;
    }
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t column0_;
  std::size_t pos_ = 0;
};

std::vector<std::string> split_names(std::string_view list, std::size_t line, std::size_t column0) {
  std::vector<std::string> names;
  std::size_t i = 0;
  while (i < list.size()) {
    const char c = list[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    if (!ident_start(c)) throw ParseError("expected a species name", line, column0 + i);
    const std::size_t start = i;
    while (i < list.size() && ident_char(list[i])) ++i;
    names.emplace_back(list.substr(start, i - start));
  }
  return names;
}

std::optional<std::string_view> header_body(std::string_view stmt, std::string_view keyword) {
  if (stmt.substr(0, keyword.size()) != keyword) return std::nullopt;
  std::string_view rest = stmt.substr(keyword.size());
  std::size_t i = 0;
  while (i < rest.size() && (rest[i] == ' ' || rest[i] == '\t')) ++i;
  if (i >= rest.size() || rest[i] != ':') return std::nullopt;
  return rest.substr(i + 1);
}

}  // namespace

ReactionNetwork parse_network(std::string_view text, const ParseOptions& options) {
  std::optional<std::vector<std::string>> header_species;
  std::vector<std::string> intermediates;
  std::vector<RawReaction> raw;

  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(begin, end - begin);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t seg_begin = 0;
    while (seg_begin <= line.size()) {
      std::size_t seg_end = line.find(';', seg_begin);
      if (seg_end == std::string_view::npos) seg_end = line.size();
      std::string_view seg = line.substr(seg_begin, seg_end - seg_begin);
      std::size_t lead = 0;
      while (lead < seg.size() && std::isspace(static_cast<unsigned char>(seg[lead]))) ++lead;
      std::string_view stmt = seg.substr(lead);
      const std::size_t col = seg_begin + lead + 1;
      while (!stmt.empty() && std::isspace(static_cast<unsigned char>(stmt.back()))) stmt.remove_suffix(1);
      if (!stmt.empty()) {
        if (auto body = header_body(stmt, "species")) {
          if (header_species) throw ParseError("species header given twice", line_no, col);
          header_species =
              split_names(*body, line_no, col + static_cast<std::size_t>(body->data() - stmt.data()));
        } else if (auto ibody = header_body(stmt, "intermediates")) {
          auto names =
              split_names(*ibody, line_no, col + static_cast<std::size_t>(ibody->data() - stmt.data()));
          intermediates.insert(intermediates.end(), names.begin(), names.end());
        } else {
          StatementParser(stmt, line_no, col).parse(raw);
        }
      }
      if (seg_end == line.size()) break;
      seg_begin = seg_end + 1;
    }
    if (end == text.size()) break;
    begin = end + 1;
  }

  if (!header_species && raw.empty()) throw InputError("empty network: no species and no reactions");

  std::vector<std::string> species;
  std::map<std::string, std::size_t> index;
  if (header_species) {
    for (const auto& s : *header_species) {
      if (!index.emplace(s, species.size()).second) throw InputError("species '" + s + "' declared twice");
      species.push_back(s);
    }
  }
  auto resolve = [&](const std::vector<RawTerm>& terms, const RawReaction& at) {
    std::vector<std::pair<std::size_t, unsigned>> entries;
    for (const auto& t : terms) {
      auto it = index.find(t.species);
      if (it == index.end()) {
        if (header_species)
          throw ParseError("species '" + t.species + "' is not declared in the species header", at.line,
                           at.column);
        it = index.emplace(t.species, species.size()).first;
        species.push_back(t.species);
      }
      entries.emplace_back(it->second, t.coeff);
    }
    return Complex(std::move(entries));
  };

  const std::string prefix = options.rate_prefix.value_or(intermediates.empty() ? "k" : "kappa");
  std::vector<ReactionSpec> specs;
  std::set<std::pair<Complex, Complex>> seen;
  std::set<std::string> labels;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const RawReaction& r = raw[i];
    Complex reactant = resolve(r.reactant, r);
    Complex product = resolve(r.product, r);
    if (reactant == product) throw ParseError("reactant and product are equal", r.line, r.column);
    if (!seen.insert({reactant, product}).second) throw ParseError("duplicate reaction", r.line, r.column);
    std::string rate = r.label.value_or(prefix + std::to_string(i + 1));
    if (!labels.insert(rate).second)
      throw ParseError("duplicate rate symbol '" + rate + "'", r.line, r.column);
    specs.push_back({std::move(reactant), std::move(product), std::move(rate)});
  }
  return ReactionNetwork(std::move(species), specs, std::move(intermediates));
}

ReactionNetwork load_network(const std::string& path, const ParseOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_network(ss.str(), options);
}

std::string render_network(const ReactionNetwork& network) {
  std::ostringstream os;
  os << "species:";
  for (const auto& s : network.species()) os << ' ' << s;
  os << '\n';
  if (!network.declared_intermediates().empty()) {
    os << "intermediates:";
    for (const auto& s : network.declared_intermediates()) os << ' ' << s;
    os << '\n';
  }
  for (const auto& r : network.reactions()) {
    os << complex_to_string(network.complexes()[r.reactant], network.species()) << " ->[" << r.rate << "] "
       << complex_to_string(network.complexes()[r.product], network.species()) << '\n';
  }
  return os.str();
}

}  // namespace crn
