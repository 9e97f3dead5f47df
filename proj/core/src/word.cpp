#include "burnside/word.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "burnside/errors.hpp"

namespace burnside {

namespace {

// Stack-based free reduction; merges equal neighbours and drops zeros.
std::vector<Syllable> reduce(const std::vector<Syllable>& in) {
  std::vector<Syllable> out;
  out.reserve(in.size());
  for (const auto& s : in) {
    if (s.exponent == 0) continue;
    if (!out.empty() && out.back().generator == s.generator) {
      out.back().exponent += s.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace

Word::Word(int rank, std::vector<Syllable> syllables) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("word rank must be positive");
  for (const auto& s : syllables) {
    if (s.generator < 1 || s.generator > rank) {
      throw std::invalid_argument("generator index " + std::to_string(s.generator) +
                                  " outside rank " + std::to_string(rank));
    }
  }
  syllables_ = reduce(syllables);
}

Word Word::generator(int rank, int index, std::int64_t exponent) {
  return Word(rank, {{index, exponent}});
}

Word Word::inverse() const {
  std::vector<Syllable> out(syllables_.rbegin(), syllables_.rend());
  for (auto& s : out) s.exponent = -s.exponent;
  Word w;
  w.rank_ = rank_;
  w.syllables_ = std::move(out);
  return w;
}

Word Word::power(std::int64_t k) const {
  const Word base = k < 0 ? inverse() : *this;
  const std::int64_t n = k < 0 ? -k : k;
  std::vector<Syllable> all;
  all.reserve(base.syllables_.size() * static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    all.insert(all.end(), base.syllables_.begin(), base.syllables_.end());
  }
  return Word(rank_, std::move(all));
}

Word Word::with_rank(int rank) const {
  return Word(rank, syllables_);
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Syllable> joined = a.syllables_;
  joined.insert(joined.end(), b.syllables_.begin(), b.syllables_.end());
  return Word(std::max(a.rank_, b.rank_), std::move(joined));
}

Word Word::commutator(const Word& u, const Word& v) {
  return u.inverse() * v.inverse() * u * v;
}

std::string Word::to_string() const {
  if (syllables_.empty()) return "1";
  static constexpr char kNamed[] = {'x', 'y', 'z', 'w'};
  std::string out;
  for (const auto& s : syllables_) {
    if (!out.empty()) out += ' ';
    if (rank_ <= 4) {
      out += kNamed[s.generator - 1];
    } else {
      out += 'x';
      out += std::to_string(s.generator);
    }
    if (s.exponent != 1) {
      out += '^';
      out += std::to_string(s.exponent);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, std::optional<int> rank_hint)
      : text_(text), rank_hint_(rank_hint) {}

  Word parse() {
    std::vector<Syllable> syl = parse_word_until("");
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    int rank = std::max(1, max_index_);
    if (rank_hint_) {
      if (*rank_hint_ < 1) throw std::invalid_argument("rank hint must be positive");
      if (max_index_ > *rank_hint_) {
        throw ParseError(max_index_pos_, "generator index " + std::to_string(max_index_) +
                                             " exceeds rank " + std::to_string(*rank_hint_));
      }
      rank = *rank_hint_;
    }
    return Word(rank, std::move(syl));
  }

 private:
  enum class Mode { Unknown, Named, Indexed };
  static constexpr std::uint64_t kMaxSyllables = 1'000'000;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip_space() {
    while (pos_ < text_.size() &&
           (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '*')) {
      ++pos_;
    }
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  // Parses terms until one of `stops` (or end of input) is seen.
  std::vector<Syllable> parse_word_until(std::string_view stops) {
    std::vector<Syllable> out;
    skip_space();
    bool any = false;
    while (!at_end() && stops.find(peek()) == std::string_view::npos) {
      auto term = parse_term();
      out.insert(out.end(), term.begin(), term.end());
      any = true;
      skip_space();
    }
    if (!any) fail(at_end() ? "expected a term, found end of input" : "expected a term");
    return out;
  }

  std::int64_t parse_int() {
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer exponent");
    std::int64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const int digit = peek() - '0';
      if (value > (INT64_MAX - digit) / 10) {
        pos_ = start;
        fail("exponent out of range");
      }
      value = value * 10 + digit;
      ++pos_;
    }
    return negative ? -value : value;
  }

  std::int64_t parse_optional_power() {
    skip_space();
    if (peek() != '^') return 1;
    ++pos_;
    return parse_int();
  }

  void note_mode(Mode m, std::size_t at) {
    if (mode_ == Mode::Unknown) {
      mode_ = m;
    } else if (mode_ != m) {
      throw ParseError(at, "named (x,y,z,w) and indexed (x1,x2,...) generators cannot be mixed");
    }
  }

  void note_index(int index, std::size_t at) {
    if (index > max_index_) {
      max_index_ = index;
      max_index_pos_ = at;
    }
  }

  static std::vector<Syllable> powered(const std::vector<Syllable>& body, std::int64_t k) {
    std::vector<Syllable> out;
    if (k == 0) return out;
    std::vector<Syllable> unit = body;
    if (k < 0) {
      std::reverse(unit.begin(), unit.end());
      for (auto& s : unit) s.exponent = -s.exponent;
      k = -k;
    }
    unit = reduce(unit);
    if (unit.size() > 1 && static_cast<std::uint64_t>(k) > kMaxSyllables / unit.size()) {
      throw std::invalid_argument("powered term is too long to expand");
    }
    if (unit.size() == 1) return {Syllable{unit[0].generator, unit[0].exponent * k}};
    for (std::int64_t i = 0; i < k; ++i) out.insert(out.end(), unit.begin(), unit.end());
    return reduce(out);
  }

  static std::vector<Syllable> inverse_of(const std::vector<Syllable>& s) {
    std::vector<Syllable> out(s.rbegin(), s.rend());
    for (auto& x : out) x.exponent = -x.exponent;
    return out;
  }

  std::vector<Syllable> parse_term() {
    skip_space();
    const std::size_t start = pos_;
    const char c = peek();
    if (c == '[') {
      ++pos_;
      auto u = parse_word_until(",]");
      if (peek() != ',') fail("expected ',' in commutator");
      ++pos_;
      auto v = parse_word_until(",]");
      if (peek() != ']') fail("expected ']' closing commutator");
      ++pos_;
      std::vector<Syllable> comm = inverse_of(u);
      auto vi = inverse_of(v);
      comm.insert(comm.end(), vi.begin(), vi.end());
      comm.insert(comm.end(), u.begin(), u.end());
      comm.insert(comm.end(), v.begin(), v.end());
      return powered(reduce(comm), parse_optional_power());
    }
    if (c == '(') {
      ++pos_;
      auto body = parse_word_until(")");
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return powered(body, parse_optional_power());
    }
    if (c == '1') {
      ++pos_;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        pos_ = start;
        fail("bare integer is not a term");
      }
      return {};
    }
    int index = 0;
    if (c == 'x') {
      ++pos_;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        int value = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
          value = value * 10 + (peek() - '0');
          if (value > 1'000'000) fail("generator index too large");
          ++pos_;
        }
        if (value < 1) {
          pos_ = start;
          fail("indexed generators start at x1");
        }
        note_mode(Mode::Indexed, start);
        index = value;
      } else {
        note_mode(Mode::Named, start);
        index = 1;
      }
    } else if (c == 'y' || c == 'z' || c == 'w') {
      ++pos_;
      note_mode(Mode::Named, start);
      index = c == 'y' ? 2 : (c == 'z' ? 3 : 4);
    } else {
      fail(at_end() ? "unexpected end of input" : "unexpected character '" + std::string(1, c) + "'");
    }
    note_index(index, start);
    const std::int64_t e = parse_optional_power();
    if (e == 0) return {};
    return {Syllable{index, e}};
  }

  std::string_view text_;
  std::optional<int> rank_hint_;
  std::size_t pos_ = 0;
  Mode mode_ = Mode::Unknown;
  int max_index_ = 0;
  std::size_t max_index_pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, std::optional<int> rank_hint) {
  return WordParser(text, rank_hint).parse();
}

// ---------------------------------------------------------------------------
// Invariants of words

std::uint64_t word_length(const Word& w) {
  std::uint64_t total = 0;
  for (const auto& s : w.syllables()) {
    total += static_cast<std::uint64_t>(s.exponent < 0 ? -s.exponent : s.exponent);
  }
  return total;
}

ExponentProfile exponent_profile(const Word& w) {
  ExponentProfile p;
  p.totals.assign(static_cast<std::size_t>(w.rank()), 0);
  for (const auto& s : w.syllables()) p.totals[static_cast<std::size_t>(s.generator - 1)] += s.exponent;
  return p;
}

std::uint64_t neumann_exponent(const Word& w) {
  if (w.empty()) throw std::invalid_argument("neumann_exponent: the word is trivial");
  std::uint64_t g = 0;
  for (std::int64_t t : exponent_profile(w).totals) {
    g = std::gcd(g, static_cast<std::uint64_t>(t < 0 ? -t : t));
  }
  return g;
}

bool in_derived_subgroup(const Word& w) {
  const auto p = exponent_profile(w);
  return std::all_of(p.totals.begin(), p.totals.end(), [](std::int64_t t) { return t == 0; });
}

std::vector<int> support(const Word& w) {
  std::set<int> s;
  for (const auto& syl : w.syllables()) s.insert(syl.generator);
  return {s.begin(), s.end()};
}

namespace {

Word renumbered(const std::vector<Syllable>& block, std::vector<int>& support_out) {
  std::set<int> s;
  for (const auto& syl : block) s.insert(syl.generator);
  support_out.assign(s.begin(), s.end());
  std::vector<Syllable> out;
  out.reserve(block.size());
  for (const auto& syl : block) {
    const auto it = std::lower_bound(support_out.begin(), support_out.end(), syl.generator);
    out.push_back({static_cast<int>(it - support_out.begin()) + 1, syl.exponent});
  }
  return Word(static_cast<int>(support_out.size()), std::move(out));
}

bool is_inverse_block(std::span<const Syllable> a, std::span<const Syllable> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& x = a[i];
    const auto& y = b[b.size() - 1 - i];
    if (x.generator != y.generator || x.exponent != -y.exponent) return false;
  }
  return true;
}

}  // namespace

std::optional<CommutatorSplit> split_disjoint_commutator(const Word& w) {
  const auto& s = w.syllables();
  const std::size_t n = s.size();
  if (n < 4 || n % 2 != 0) return std::nullopt;
  const std::span<const Syllable> all(s);
  // w = A B C D with C = A^-1 and D = B^-1, so |A| = |C| and |B| = |D|.
  for (std::size_t a = 1; 2 * a < n; ++a) {
    const std::size_t b = n / 2 - a;
    if (b == 0) continue;
    const auto A = all.subspan(0, a);
    const auto B = all.subspan(a, b);
    const auto C = all.subspan(a + b, a);
    const auto D = all.subspan(2 * a + b, b);
    if (!is_inverse_block(A, C) || !is_inverse_block(B, D)) continue;
    std::set<int> sc, sd;
    for (const auto& x : C) sc.insert(x.generator);
    for (const auto& x : D) sd.insert(x.generator);
    const bool disjoint = std::none_of(sc.begin(), sc.end(), [&](int g) { return sd.count(g) > 0; });
    if (!disjoint) continue;
    CommutatorSplit out;
    out.first = renumbered({C.begin(), C.end()}, out.first_support);
    out.second = renumbered({D.begin(), D.end()}, out.second_support);
    return out;
  }
  return std::nullopt;
}

}  // namespace burnside
