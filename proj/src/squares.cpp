#include "simal/squares.hpp"

#include <unordered_set>

#include "simal/congruence.hpp"
#include "simal/error.hpp"

namespace simal {

  DoubleExtensionReport is_double_extension(Homomorphism const& f,
                                            Homomorphism const& g,
                                            Homomorphism const& h,
                                            Homomorphism const& j) {
    if (f.dom()->size() != g.dom()->size() || h.dom()->size() != f.cod()->size()
        || j.dom()->size() != g.cod()->size()
        || h.cod()->size() != j.cod()->size()) {
      fail(Errc::precondition_unmet, "square sides do not fit together");
    }
    for (Elem a = 0; a < f.dom()->size(); ++a) {
      if (h(f(a)) != j(g(a))) {
        fail(Errc::not_commuting,
             "square does not commute at " + std::to_string(a));
      }
    }
    for (auto const* m : {&f, &g, &h, &j}) {
      if (!m->is_surjective()) {
        fail(Errc::not_regular_epi,
             "square side " + m->dom()->name() + " -> " + m->cod()->name()
                 + " is not surjective");
      }
    }
    DoubleExtensionReport r;
    std::vector<size_t>   hb(h.cod()->size(), 0), jc(j.cod()->size(), 0);
    for (Elem b = 0; b < h.dom()->size(); ++b) {
      ++hb[h(b)];
    }
    for (Elem c = 0; c < j.dom()->size(); ++c) {
      ++jc[j(c)];
    }
    for (size_t d = 0; d < hb.size(); ++d) {
      r.pullback_size += hb[d] * jc[d];
    }
    std::unordered_set<uint64_t> seen;
    for (Elem a = 0; a < f.dom()->size(); ++a) {
      seen.insert((uint64_t(f(a)) << 32) | g(a));
    }
    r.comparison_image      = seen.size();
    r.comparison_surjective = r.comparison_image == r.pullback_size;

    Congruence img          = image_congruence(f, kernel_pair(g));
    r.image_criterion       = img == kernel_pair(h);
    if (r.image_criterion != r.comparison_surjective) {
      fail(Errc::property_violation,
           "double extension criteria disagree on the square through "
               + f.dom()->name());
    }
    return r;
  }

}  // namespace simal
