#include "spschub/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

#include "spschub/error.hpp"

namespace spschub {

namespace {

std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

int parse_int_token(const std::string& tok) {
  if (tok.empty()) fail(ErrorCode::Parse, "empty integer token");
  std::size_t pos = 0;
  if (tok[0] == '-' || tok[0] == '+') pos = 1;
  if (pos == tok.size()) fail(ErrorCode::Parse, "malformed integer '" + tok + "'");
  for (std::size_t i = pos; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i])))
      fail(ErrorCode::Parse, "malformed integer '" + tok + "'");
  if (tok.size() - pos > 9) fail(ErrorCode::Parse, "integer out of range '" + tok + "'");
  return std::stoi(tok);
}

}  // namespace

SignedPermutation::SignedPermutation(std::vector<int> entries)
    : entries_(std::move(entries)) {
  const int n = rank();
  std::vector<bool> seen(n + 1, false);
  for (int v : entries_) {
    const int a = std::abs(v);
    require(a >= 1 && a <= n && !seen[a],
            "entries must be a signed permutation of 1.." + std::to_string(n));
    seen[a] = true;
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  require(n >= 0, "rank must be nonnegative");
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  return SignedPermutation(std::move(e));
}

SignedPermutation SignedPermutation::generator(int a, int n) {
  require(a >= 0 && a < n, "generator index out of range");
  return identity(n).times_generator(a);
}

SignedPermutation SignedPermutation::longest(int n) {
  std::vector<int> e(n);
  for (int i = 0; i < n; ++i) e[i] = -(i + 1);
  return SignedPermutation(std::move(e));
}

SignedPermutation SignedPermutation::longest_unsigned(int n) {
  std::vector<int> e(n);
  for (int i = 0; i < n; ++i) e[i] = n - i;
  return SignedPermutation(std::move(e));
}

SignedPermutation SignedPermutation::from_word(const Word& word, int n) {
  SignedPermutation w = identity(n);
  for (int a : word) w = w.times_generator(a);
  return w;
}

SignedPermutation SignedPermutation::parse(std::string_view text, int n) {
  const auto tokens = split_tokens(text);
  if (tokens.empty() || (tokens.size() == 1 && tokens[0] == "e")) return identity(n);
  const bool word_form = tokens[0][0] == 's' || tokens[0][0] == 'S';
  if (word_form) {
    Word word;
    for (const auto& tok : tokens) {
      std::size_t i = 0;
      while (i < tok.size()) {
        if (tok[i] != 's' && tok[i] != 'S')
          fail(ErrorCode::Parse, "expected 's<index>' in word '" + tok + "'");
        std::size_t j = i + 1;
        while (j < tok.size() && std::isdigit(static_cast<unsigned char>(tok[j]))) ++j;
        if (j == i + 1) fail(ErrorCode::Parse, "missing generator index in '" + tok + "'");
        const int a = std::stoi(tok.substr(i + 1, j - i - 1));
        require(a >= 0 && a < n, "generator s" + std::to_string(a) +
                                     " is not in W_" + std::to_string(n));
        word.push_back(a);
        i = j;
      }
    }
    return from_word(word, n);
  }
  std::vector<int> e;
  for (const auto& tok : tokens) e.push_back(parse_int_token(tok));
  require(static_cast<int>(e.size()) == n,
          "expected " + std::to_string(n) + " entries, got " + std::to_string(e.size()));
  return SignedPermutation(std::move(e));
}

int SignedPermutation::apply(int i) const {
  const int a = std::abs(i);
  require(a >= 1 && a <= rank(), "argument out of range");
  const int v = entries_[a - 1];
  return i > 0 ? v : -v;
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> e(entries_.size());
  for (int i = 0; i < rank(); ++i) {
    const int v = entries_[i];
    e[std::abs(v) - 1] = v > 0 ? i + 1 : -(i + 1);
  }
  return SignedPermutation(std::move(e));
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& rhs) const {
  require(rank() == rhs.rank(), "rank mismatch in product");
  std::vector<int> e(entries_.size());
  for (int i = 0; i < rank(); ++i) e[i] = apply(rhs.entries_[i]);
  return SignedPermutation(std::move(e));
}

SignedPermutation SignedPermutation::times_generator(int a) const {
  require(a >= 0 && a < rank(), "generator index out of range");
  SignedPermutation w = *this;
  if (a == 0)
    w.entries_[0] = -w.entries_[0];
  else
    std::swap(w.entries_[a - 1], w.entries_[a]);
  return w;
}

bool SignedPermutation::is_unsigned() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int v) { return v > 0; });
}

int SignedPermutation::bar_count() const {
  return static_cast<int>(
      std::count_if(entries_.begin(), entries_.end(), [](int v) { return v < 0; }));
}

std::string SignedPermutation::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rank(); ++i) {
    if (i) os << ' ';
    os << entries_[i];
  }
  return os.str();
}

int length(const SignedPermutation& w) {
  const auto e = w.entries();
  const int n = w.rank();
  int len = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (i < j && e[i] > e[j]) ++len;
      if (-e[i] > e[j]) ++len;
    }
  }
  return len;
}

bool is_reduced(const Word& word, int n) {
  return length(SignedPermutation::from_word(word, n)) == static_cast<int>(word.size());
}

namespace {

using WordCache = std::map<SignedPermutation, std::vector<Word>>;

const std::vector<Word>& reduced_words_memo(const SignedPermutation& w, WordCache& cache) {
  if (auto it = cache.find(w); it != cache.end()) return it->second;
  std::vector<Word> words;
  const int len = length(w);
  if (len == 0) {
    words.push_back({});
  } else {
    for (int a = 0; a < w.rank(); ++a) {
      const SignedPermutation shorter = w.times_generator(a);
      if (length(shorter) != len - 1) continue;
      for (const Word& prefix : reduced_words_memo(shorter, cache)) {
        Word extended = prefix;
        extended.push_back(a);
        words.push_back(std::move(extended));
      }
    }
    std::sort(words.begin(), words.end());
  }
  return cache.emplace(w, std::move(words)).first->second;
}

}  // namespace

std::vector<Word> reduced_words(const SignedPermutation& w,
                                std::optional<std::size_t> limit) {
  WordCache cache;
  std::vector<Word> words = reduced_words_memo(w, cache);
  if (limit && words.size() > *limit) words.resize(*limit);
  return words;
}

Word first_reduced_word(const SignedPermutation& w) {
  Word word;
  SignedPermutation cur = w;
  const int n = w.rank();
  int len = length(cur);
  while (len > 0) {
    for (int a = 0; a < n; ++a) {
      SignedPermutation next = SignedPermutation::generator(a, n) * cur;
      if (length(next) == len - 1) {
        word.push_back(a);
        cur = std::move(next);
        --len;
        break;
      }
    }
  }
  return word;
}

std::string word_to_string(const Word& word) {
  if (word.empty()) return "e";
  std::ostringstream os;
  for (int a : word) os << 's' << a;
  return os.str();
}

std::vector<int> embed_phi(const SignedPermutation& w) {
  const int n = w.rank();
  std::vector<int> phi(2 * n);
  for (int i = 1; i <= n; ++i) {
    const int v = w[n - i];
    const int image = v > 0 ? n + 1 - v : n - v;
    phi[i - 1] = image;
    phi[2 * n - i] = 2 * n + 1 - image;
  }
  return phi;
}

SignedPermutation embed(const SignedPermutation& w, int n) {
  require(n >= w.rank(), "cannot embed into a smaller rank");
  std::vector<int> e(w.entries().begin(), w.entries().end());
  for (int i = w.rank() + 1; i <= n; ++i) e.push_back(i);
  return SignedPermutation(std::move(e));
}

std::vector<SignedPermutation> hyperoctahedral_group(int n) {
  require(n >= 1 && n <= 6, "rank must be in 1..6");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::pair<std::pair<int, Word>, SignedPermutation>> keyed;
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> e(perm);
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) e[i] = -e[i];
      SignedPermutation w(std::move(e));
      keyed.push_back({{length(w), first_reduced_word(w)}, std::move(w)});
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(keyed.begin(), keyed.end());
  std::vector<SignedPermutation> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(std::move(k.second));
  return out;
}

std::vector<SignedPermutation> symmetric_group(int n) {
  require(n >= 1 && n <= 8, "rank must be in 1..8");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::pair<int, SignedPermutation>> keyed;
  do {
    SignedPermutation w(perm);
    keyed.emplace_back(length(w), std::move(w));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<SignedPermutation> out;
  for (auto& k : keyed) out.push_back(std::move(k.second));
  return out;
}

// ---------------------------------------------------------------------------
// Partitions

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    require(parts_[i] >= 0, "partition parts must be nonnegative");
    require(i == 0 || parts_[i] <= parts_[i - 1], "partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  for (const auto& tok : split_tokens(text)) parts.push_back(parse_int_token(tok));
  return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::is_strict() const {
  return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

Partition Partition::complement(int n) const {
  require(is_strict() && largest() <= n, "complement needs a strict partition with parts <= n");
  std::vector<int> out;
  for (int k = n; k >= 1; --k)
    if (std::find(parts_.begin(), parts_.end(), k) == parts_.end()) out.push_back(k);
  return Partition(std::move(out));
}

int Partition::largest_repeated_part() const {
  for (std::size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i] == parts_[i - 1]) return parts_[i];
  return 0;
}

Partition Partition::remove_pair(int part) const {
  std::vector<int> out = parts_;
  for (int copies = 0; copies < 2; ++copies) {
    auto it = std::find(out.begin(), out.end(), part);
    require(it != out.end(), "part does not occur twice");
    out.erase(it);
  }
  return Partition(std::move(out));
}

Partition Partition::add_pair(int part) const {
  std::vector<int> out = parts_;
  out.push_back(part);
  out.push_back(part);
  std::sort(out.begin(), out.end(), std::greater<>());
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_bounded(int weight, int n) {
  require(weight >= 0, "weight must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(weight, n, cur, out);
  return out;
}

std::vector<Partition> strict_partitions(int n) {
  std::vector<Partition> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> parts;
    for (int k = n; k >= 1; --k)
      if (mask & (1 << (k - 1))) parts.push_back(k);
    out.emplace_back(std::move(parts));
  }
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return b < a;
  });
  return out;
}

SignedPermutation max_grassmannian(const Partition& lambda, int n) {
  require(lambda.is_strict(), "maximal Grassmannian element needs a strict partition");
  require(lambda.largest() <= n, "partition part exceeds rank");
  std::vector<int> e;
  for (int p : lambda.parts()) e.push_back(-p);
  const Partition comp = lambda.complement(n);
  for (int i = comp.length() - 1; i >= 0; --i) e.push_back(comp[i]);
  return SignedPermutation(std::move(e));
}

}  // namespace spschub
