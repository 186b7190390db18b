#include "dgg/skeletons.hpp"

#include <sstream>
#include <stdexcept>

namespace dgg {

void add_term(LinComb& x, const Label& label, const QPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = x.try_emplace(label, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) x.erase(it);
  }
}

LinComb operator+(const LinComb& a, const LinComb& b) {
  LinComb r = a;
  for (const auto& [l, c] : b) add_term(r, l, c);
  return r;
}

LinComb operator-(const LinComb& a, const LinComb& b) {
  LinComb r = a;
  for (const auto& [l, c] : b) add_term(r, l, -c);
  return r;
}

LinComb operator*(const QPoly& c, const LinComb& x) {
  LinComb r;
  for (const auto& [l, v] : x) add_term(r, l, c * v);
  return r;
}

std::string to_string(const LinComb& x) {
  if (x.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [l, c] : x) {
    if (!first) out << " + ";
    first = false;
    int terms = 0;
    for (Int v : c.coeffs())
      if (v != 0) ++terms;
    if (c.is_one())
      out << l.to_string();
    else if (terms == 1 && c.coeff(c.degree()) > 0)
      out << c.to_string() << ' ' << l.to_string();
    else
      out << '(' << c.to_string() << ") " << l.to_string();
  }
  return out.str();
}

namespace {

const Partition& as_partition(const Label& l) {
  if (const auto* p = std::get_if<Partition>(&l.value)) return *p;
  throw std::invalid_argument("expected a partition label");
}

const Composition& as_composition(const Label& l) {
  if (const auto* p = std::get_if<Composition>(&l.value)) return *p;
  throw std::invalid_argument("expected a composition label");
}

const Permutation& as_permutation(const Label& l) {
  if (const auto* p = std::get_if<Permutation>(&l.value)) return *p;
  throw std::invalid_argument("expected a permutation label");
}

const ChainLevel& as_chain(const Label& l) {
  if (const auto* p = std::get_if<ChainLevel>(&l.value)) return *p;
  throw std::invalid_argument("expected a chain-level label");
}

class YoungSkeleton final : public HopfSkeleton {
 public:
  std::string name() const override { return "young"; }
  bool quantized() const override { return false; }

  std::vector<Label> labels(int degree) const override {
    std::vector<Label> out;
    for (auto& p : partitions_of(degree)) out.emplace_back(std::move(p));
    return out;
  }

  LinComb up(const Label& v) const override {
    const auto& lam = as_partition(v);
    LinComb out;
    const int len = static_cast<int>(lam.parts.size());
    for (int i = 0; i <= len; ++i) {
      // a box may be added to row i when it stays weakly decreasing
      int cur = i < len ? lam.parts[static_cast<std::size_t>(i)] : 0;
      int above = i > 0 ? lam.parts[static_cast<std::size_t>(i) - 1] : cur + 1;
      if (above <= cur) continue;
      Partition mu = lam;
      if (i < len)
        ++mu.parts[static_cast<std::size_t>(i)];
      else
        mu.parts.push_back(1);
      add_term(out, Label(std::move(mu)), 1);
    }
    return out;
  }

  LinComb down(const Label& v) const override {
    const auto& lam = as_partition(v);
    LinComb out;
    const int len = static_cast<int>(lam.parts.size());
    for (int i = 0; i < len; ++i) {
      int below = i + 1 < len ? lam.parts[static_cast<std::size_t>(i) + 1] : 0;
      if (lam.parts[static_cast<std::size_t>(i)] <= below) continue;
      Partition mu = lam;
      if (--mu.parts[static_cast<std::size_t>(i)] == 0) mu.parts.pop_back();
      add_term(out, Label(std::move(mu)), 1);
    }
    return out;
  }
};

class NilCoxeterSkeleton final : public HopfSkeleton {
 public:
  explicit NilCoxeterSkeleton(bool quantized) : quantized_(quantized) {}

  std::string name() const override {
    return quantized_ ? "nilcoxeter-q" : "nilcoxeter";
  }
  bool quantized() const override { return quantized_; }

  std::vector<Label> labels(int degree) const override {
    return {Label(ChainLevel(degree))};
  }

  LinComb up(const Label& v) const override {
    const int i = as_chain(v).n;
    LinComb out;
    add_term(out, Label(ChainLevel(i + 1)), quantized_ ? q_int(i + 1) : QPoly(i + 1));
    return out;
  }

  LinComb down(const Label& v) const override {
    const int i = as_chain(v).n;
    LinComb out;
    if (i >= 1) add_term(out, Label(ChainLevel(i - 1)), 1);
    return out;
  }

 private:
  bool quantized_;
};

class ZeroHeckeSkeleton final : public HopfSkeleton {
 public:
  explicit ZeroHeckeSkeleton(bool quantized) : quantized_(quantized) {}

  std::string name() const override {
    return quantized_ ? "zero-hecke-q" : "zero-hecke";
  }
  bool quantized() const override { return quantized_; }

  std::vector<Label> labels(int degree) const override {
    std::vector<Label> out;
    for (auto& c : compositions_of(degree)) out.emplace_back(std::move(c));
    return out;
  }

  // One edge per insertion point of the new letter: n+1 distinct targets with
  // weights q^0..q^n. Agrees with the expansion of F_(1) * F_I term by term.
  LinComb up(const Label& v) const override {
    const auto& I = as_composition(v);
    const int n = I.size();
    const auto& parts = I.parts;
    LinComb out;
    auto weight = [&](int e) { return quantized_ ? QPoly::monomial(1, e) : QPoly(1); };
    int before = 0;  // i_1 + ... + i_{j-1}
    for (std::size_t j = 0; j < parts.size(); ++j) {
      Composition grown = I;
      ++grown.parts[j];
      add_term(out, Label(std::move(grown)), weight(before));
      for (int t = 1; t < parts[j]; ++t) {
        Composition split;
        split.parts.assign(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(j));
        split.parts.push_back(t);
        split.parts.push_back(parts[j] - t + 1);
        split.parts.insert(split.parts.end(),
                           parts.begin() + static_cast<std::ptrdiff_t>(j) + 1,
                           parts.end());
        add_term(out, Label(std::move(split)), weight(before + t));
      }
      before += parts[j];
    }
    Composition appended = I;
    appended.parts.push_back(1);
    add_term(out, Label(std::move(appended)), weight(n));
    return out;
  }

  // Lifted binary tree: unique parent, multiplicity 1.
  LinComb down(const Label& v) const override {
    const auto& I = as_composition(v);
    LinComb out;
    if (I.parts.empty()) return out;
    Composition parent;
    if (I.parts.front() == 1)
      parent.parts.assign(I.parts.begin() + 1, I.parts.end());
    else {
      parent = I;
      --parent.parts.front();
    }
    add_term(out, Label(std::move(parent)), 1);
    return out;
  }

 private:
  bool quantized_;
};

class MalvenutoReutenauerSkeleton final : public HopfSkeleton {
 public:
  explicit MalvenutoReutenauerSkeleton(int cap) : cap_(cap) {}

  std::string name() const override { return "mr"; }
  bool quantized() const override { return false; }

  std::vector<Label> labels(int degree) const override {
    std::vector<Label> out;
    for (auto& w : permutations_of(degree, cap_)) out.emplace_back(std::move(w));
    return out;
  }

  LinComb up(const Label& v) const override {
    const auto& sigma = as_permutation(v);
    const int n = sigma.size();
    Permutation emb = embed(sigma);
    LinComb out;
    for (const auto& zeta : shuffle_perms(n + 1))
      add_term(out, Label(compose(emb, inverse(zeta))), 1);
    return out;
  }

  LinComb down(const Label& v) const override {
    const auto& u = as_permutation(v);
    const int n = u.size() - 1;
    LinComb out;
    if (n < 0) return out;
    for (const auto& zeta : shuffle_perms(n + 1)) {
      Permutation w = compose(inverse(zeta), u);
      if (w.word.front() != 1) continue;
      Permutation tau;
      tau.word.reserve(static_cast<std::size_t>(n));
      for (std::size_t i = 1; i < w.word.size(); ++i)
        tau.word.push_back(w.word[i] - 1);
      add_term(out, Label(std::move(tau)), 1);
    }
    return out;
  }

 private:
  // 1 x sigma in S_{n+1}
  static Permutation embed(const Permutation& sigma) {
    Permutation emb;
    emb.word.push_back(1);
    for (int x : sigma.word) emb.word.push_back(x + 1);
    return emb;
  }

  // Shuf(1, n): the N = n+1 permutations with zeta(2) < ... < zeta(N);
  // zeta_p sends 1 to p and lists the rest in increasing order.
  static std::vector<Permutation> shuffle_perms(int N) {
    std::vector<Permutation> out;
    for (int p = 1; p <= N; ++p) {
      Permutation zeta;
      zeta.word.push_back(p);
      for (int x = 1; x <= N; ++x)
        if (x != p) zeta.word.push_back(x);
      out.push_back(std::move(zeta));
    }
    return out;
  }

  int cap_;
};

}  // namespace

std::unique_ptr<HopfSkeleton> young_skeleton() {
  return std::make_unique<YoungSkeleton>();
}

std::unique_ptr<HopfSkeleton> nilcoxeter_skeleton(bool quantized) {
  return std::make_unique<NilCoxeterSkeleton>(quantized);
}

std::unique_ptr<HopfSkeleton> zero_hecke_skeleton(bool quantized) {
  return std::make_unique<ZeroHeckeSkeleton>(quantized);
}

std::unique_ptr<HopfSkeleton> mr_skeleton(int permutation_cap) {
  return std::make_unique<MalvenutoReutenauerSkeleton>(permutation_cap);
}

std::unique_ptr<HopfSkeleton> make_skeleton(std::string_view name,
                                            int permutation_cap) {
  if (name == "young") return young_skeleton();
  if (name == "nilcoxeter") return nilcoxeter_skeleton(false);
  if (name == "nilcoxeter-q") return nilcoxeter_skeleton(true);
  if (name == "zero-hecke") return zero_hecke_skeleton(false);
  if (name == "zero-hecke-q") return zero_hecke_skeleton(true);
  if (name == "mr") return mr_skeleton(permutation_cap);
  throw std::invalid_argument("unknown instance: " + std::string(name));
}

const std::vector<std::string>& skeleton_names() {
  static const std::vector<std::string> names = {
      "young", "nilcoxeter", "nilcoxeter-q", "zero-hecke", "zero-hecke-q", "mr"};
  return names;
}

}  // namespace dgg
