#include "dgg/comblab.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dgg {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1)
      throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts[i - 1] < parts[i])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

int Partition::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out << ',';
    out << parts[i];
  }
  out << ']';
  return out.str();
}

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
  for (int x : parts)
    if (x < 1) throw std::invalid_argument("Composition: parts must be positive");
}

int Composition::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string Composition::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out << ',';
    out << parts[i];
  }
  out << ')';
  return out.str();
}

Permutation::Permutation(std::vector<int> w) : word(std::move(w)) {
  std::vector<bool> seen(word.size(), false);
  for (int x : word) {
    if (x < 1 || x > static_cast<int>(word.size()) || seen[x - 1])
      throw std::invalid_argument("Permutation: word is not a bijection on 1..n");
    seen[x - 1] = true;
  }
}

std::string Permutation::to_string() const {
  if (word.empty()) return "e";
  std::ostringstream out;
  // one-line form; comma-separated past 9 letters where digits get ambiguous
  bool wide = word.size() > 9;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (wide && i) out << ',';
    out << word[i];
  }
  return out.str();
}

ChainLevel::ChainLevel(int level) : n(level) {
  if (n < 0) throw std::invalid_argument("ChainLevel: negative level");
}

Word::Word(std::string w) : letters(std::move(w)) {
  for (char c : letters)
    if (c != 'A' && c != 'B')
      throw std::invalid_argument("Word: letters must be A or B");
}

int Label::degree() const {
  return std::visit(
      [](const auto& x) -> int {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ChainLevel>)
          return x.n;
        else
          return x.size();
      },
      value);
}

std::string Label::to_string() const {
  return std::visit([](const auto& x) { return x.to_string(); }, value);
}

std::vector<Composition> compositions_of(int n) {
  if (n < 0) throw std::invalid_argument("compositions_of: negative argument");
  std::vector<Composition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      out.emplace_back(Composition{});
      out.back().parts = cur;
      return;
    }
    for (int first = 1; first <= rest; ++first) {
      cur.push_back(first);
      self(self, rest - first);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative argument");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.emplace_back(Partition{});
      out.back().parts = cur;
      return;
    }
    for (int first = std::min(rest, maxpart); first >= 1; --first) {
      cur.push_back(first);
      self(self, rest - first, first);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::vector<Permutation> permutations_of(int n, int cap) {
  if (n < 0) throw std::invalid_argument("permutations_of: negative argument");
  if (n > cap)
    throw std::length_error("permutations_of: enumeration cap exceeded (n=" +
                            std::to_string(n) + ", cap=" + std::to_string(cap) +
                            ")");
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(Permutation{});
    out.back().word = w;
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<int> descent_set(const Permutation& w) {
  std::vector<int> out;
  for (int i = 1; i < w.size(); ++i)
    if (w.word[i - 1] > w.word[i]) out.push_back(i);
  return out;
}

std::vector<int> descent_set(const Composition& I) {
  std::vector<int> out;
  int s = 0;
  for (std::size_t j = 0; j + 1 < I.parts.size(); ++j) {
    s += I.parts[j];
    out.push_back(s);
  }
  return out;
}

Composition composition_from_descents(int n, const std::vector<int>& descents) {
  Composition I;
  int prev = 0;
  for (int d : descents) {
    if (d <= prev || d >= n)
      throw std::invalid_argument("composition_from_descents: bad descent set");
    I.parts.push_back(d - prev);
    prev = d;
  }
  if (n > 0) I.parts.push_back(n - prev);
  return I;
}

Composition composition_of_word(const Permutation& u) {
  return composition_from_descents(u.size(), descent_set(u));
}

Permutation canonical_rep(const Composition& I) {
  const int n = I.size();
  if (n < 1) throw std::invalid_argument("canonical_rep: empty composition");
  // pattern[i] == true: descent required between positions i+1 and i+2
  std::vector<bool> pattern(static_cast<std::size_t>(n) - 1, false);
  for (int d : descent_set(I)) pattern[static_cast<std::size_t>(d) - 1] = true;

  // Greedy, position by position: place the smallest unused letter whose rank
  // among the remaining letters leaves room for the run of descents (needs
  // that many letters below) or ascents (that many above) that follows.
  std::vector<int> avail(static_cast<std::size_t>(n));
  std::iota(avail.begin(), avail.end(), 1);
  std::vector<int> w;
  for (int pos = 0; pos < n; ++pos) {
    int lead_desc = 0, lead_asc = 0;
    for (int i = pos; i < n - 1; ++i) {
      if (pattern[static_cast<std::size_t>(i)] && lead_asc == 0)
        ++lead_desc;
      else if (!pattern[static_cast<std::size_t>(i)] && lead_desc == 0)
        ++lead_asc;
      else
        break;
    }
    const int remaining = static_cast<int>(avail.size());
    int chosen = -1;
    for (std::size_t k = 0; k < avail.size(); ++k) {
      int x = avail[k];
      if (pos > 0) {
        bool desc = pattern[static_cast<std::size_t>(pos) - 1];
        if (desc && x > w.back()) continue;
        if (!desc && x < w.back()) continue;
      }
      int rank = static_cast<int>(k) + 1;
      if (rank < lead_desc + 1) continue;
      if (rank > remaining - lead_asc) continue;
      chosen = x;
      avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(k));
      break;
    }
    if (chosen < 0)
      throw std::logic_error("canonical_rep: no feasible letter");  // unreachable
    w.push_back(chosen);
  }
  Permutation out;
  out.word = std::move(w);
  return out;
}

int inversions(const Permutation& w) {
  int count = 0;
  for (int i = 0; i < w.size(); ++i)
    for (int j = i + 1; j < w.size(); ++j)
      if (w.word[i] > w.word[j]) ++count;
  return count;
}

std::vector<Shuffle> shuffles(const Permutation& w, const Permutation& v) {
  const int m = w.size(), n = v.size(), N = m + n;
  std::vector<Shuffle> out;

  // iterate m-subsets of {0..N-1} (positions of w's letters) in lex order
  std::vector<int> pos(static_cast<std::size_t>(m));
  std::iota(pos.begin(), pos.end(), 0);
  while (true) {
    Shuffle sh;
    sh.word.word.assign(static_cast<std::size_t>(N), 0);
    std::vector<bool> small(static_cast<std::size_t>(N), false);
    for (int p : pos) small[static_cast<std::size_t>(p)] = true;
    int wi = 0, vi = 0, bigs_seen = 0;
    for (int i = 0; i < N; ++i) {
      if (small[static_cast<std::size_t>(i)]) {
        sh.word.word[static_cast<std::size_t>(i)] = w.word[wi++];
        sh.theta += bigs_seen;
      } else {
        sh.word.word[static_cast<std::size_t>(i)] = v.word[vi++] + m;
        ++bigs_seen;
      }
    }
    out.push_back(std::move(sh));

    if (m == 0) break;
    int k = m - 1;
    while (k >= 0 && pos[static_cast<std::size_t>(k)] == N - m + k) --k;
    if (k < 0) break;
    ++pos[static_cast<std::size_t>(k)];
    for (int i = k + 1; i < m; ++i)
      pos[static_cast<std::size_t>(i)] = pos[static_cast<std::size_t>(i - 1)] + 1;
  }
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("compose: size mismatch");
  Permutation r;
  r.word.resize(b.word.size());
  for (std::size_t i = 0; i < b.word.size(); ++i)
    r.word[i] = a.word[static_cast<std::size_t>(b.word[i]) - 1];
  return r;
}

Permutation inverse(const Permutation& a) {
  Permutation r;
  r.word.resize(a.word.size());
  for (std::size_t i = 0; i < a.word.size(); ++i)
    r.word[static_cast<std::size_t>(a.word[i]) - 1] = static_cast<int>(i) + 1;
  return r;
}

}  // namespace dgg
