// Test-only skeleton with differential coefficient 2: the free algebra on
// two primitive letters. up(w) inserts A or B at every position (coinciding
// insertions accumulate), down(w) deletes the first letter. DU - UD = 2 Id,
// which exercises the r != 1 code paths none of the library instances hit.
#pragma once

#include <string>

#include "dgg/skeletons.hpp"

namespace dggtest {

class InsertionSkeleton final : public dgg::HopfSkeleton {
 public:
  std::string name() const override { return "two-letter-insertion"; }
  bool quantized() const override { return false; }
  dgg::QPoly diff_coeff() const override { return 2; }

  std::vector<dgg::Label> labels(int degree) const override {
    std::vector<dgg::Label> out;
    std::string w(static_cast<std::size_t>(degree), 'A');
    // lex order: treat A < B as binary counting
    while (true) {
      out.emplace_back(dgg::Word(w));
      int i = degree - 1;
      while (i >= 0 && w[static_cast<std::size_t>(i)] == 'B') {
        w[static_cast<std::size_t>(i)] = 'A';
        --i;
      }
      if (i < 0) break;
      w[static_cast<std::size_t>(i)] = 'B';
    }
    return out;
  }

  dgg::LinComb up(const dgg::Label& v) const override {
    const auto& w = std::get<dgg::Word>(v.value).letters;
    dgg::LinComb out;
    for (std::size_t p = 0; p <= w.size(); ++p)
      for (char c : {'A', 'B'}) {
        std::string u = w;
        u.insert(u.begin() + static_cast<std::ptrdiff_t>(p), c);
        add_term(out, dgg::Label(dgg::Word(std::move(u))), 1);
      }
    return out;
  }

  dgg::LinComb down(const dgg::Label& v) const override {
    const auto& w = std::get<dgg::Word>(v.value).letters;
    dgg::LinComb out;
    if (!w.empty()) add_term(out, dgg::Label(dgg::Word(w.substr(1))), 1);
    return out;
  }
};

}  // namespace dggtest
