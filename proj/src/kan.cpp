#include "simal/kan.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "simal/error.hpp"

namespace simal {

  namespace {

    FaceLimit face_limit(SimplicialPtr const&  x,
                         unsigned              n,
                         std::vector<unsigned> faces,
                         std::string const&    label,
                         size_t                budget) {
      AlgebraPtr const& lower = x->level(n - 1);
      size_t const      w     = faces.size();

      std::vector<LinkConstraint> cs;
      for (size_t b = 0; b < w; ++b) {
        for (size_t a = 0; a < b; ++a) {
          unsigned i = faces[a], j = faces[b];
          // d_i x_j = d_{j-1} x_i
          cs.push_back({b, &x->d(n - 1, i), a, &x->d(n - 1, j - 1)});
        }
      }
      FaceLimit out;
      out.n     = n;
      out.faces = faces;
      out.limit = make_limit(label + "(" + x->name() + ")",
                             std::vector<AlgebraPtr>(w, lower),
                             compatible_tuples(std::vector<size_t>(w, lower->size()), cs, budget));
      if (n <= x->truncation()) {
        std::vector<Elem> map(x->level(n)->size());
        std::vector<Elem> t(w);
        for (Elem e = 0; e < map.size(); ++e) {
          for (size_t c = 0; c < w; ++c) {
            t[c] = x->d(n, faces[c])(e);
          }
          size_t pos = out.limit->find(t);
          if (pos == TupleIndex::npos) {
            fail(Errc::property_violation,
                 x->name() + ": faces of an element do not form a compatible tuple");
          }
          map[e] = static_cast<Elem>(pos);
        }
        out.comparison = Homomorphism::trusted(x->level(n), out.limit->algebra, std::move(map));
      }
      return out;
    }

    size_t image_size(std::vector<Elem> const& map) {
      std::unordered_set<Elem> s(map.begin(), map.end());
      return s.size();
    }

  }  // namespace

  bool KanReport::holds() const {
    return std::all_of(entries.begin(), entries.end(), [](KanEntry const& e) {
      return e.surjective;
    });
  }

  FaceLimit simplicial_kernel(SimplicialPtr const& x, unsigned n, size_t budget) {
    if (n < 2 || n > x->truncation() + 1) {
      fail(Errc::precondition_unmet,
           "simplicial kernel K_" + std::to_string(n) + " needs 2 <= n <= truncation + 1");
    }
    std::vector<unsigned> faces(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
      faces[i] = i;
    }
    return face_limit(x, n, std::move(faces), "K" + std::to_string(n), budget);
  }

  FaceLimit horn(SimplicialPtr const& x, unsigned n, unsigned k, size_t budget) {
    if (n < 2 || n > x->truncation() || k > n) {
      fail(Errc::precondition_unmet,
           "horn (" + std::to_string(n) + "," + std::to_string(k)
               + ") needs 2 <= n <= truncation and k <= n");
    }
    std::vector<unsigned> faces;
    for (unsigned i = 0; i <= n; ++i) {
      if (i != k) {
        faces.push_back(i);
      }
    }
    return face_limit(
        x, n, std::move(faces), "L" + std::to_string(n) + "_" + std::to_string(k), budget);
  }

  KanReport kan_check(SimplicialPtr const& x, size_t budget) {
    KanReport r;
    for (unsigned n = 2; n <= x->truncation(); ++n) {
      for (unsigned k = 0; k <= n; ++k) {
        FaceLimit h  = horn(x, n, k, budget);
        size_t    hs = h.limit->tuples.size();
        size_t    im = image_size(h.comparison->map());
        r.entries.push_back({n, k, hs, im, im == hs, im == hs && im == x->level(n)->size()});
      }
    }
    return r;
  }

  KanReport kan_fibration_check(SimplicialMorphism const& f, size_t budget) {
    KanReport            r;
    SimplicialPtr const& x = f.dom();
    SimplicialPtr const& y = f.cod();
    for (unsigned n = 2; n <= x->truncation(); ++n) {
      for (unsigned k = 0; k <= n; ++k) {
        FaceLimit hx = horn(x, n, k, budget);
        FaceLimit hy = horn(y, n, k, budget);
        size_t    w  = hx.faces.size();

        // Lambda(f) : horn of X -> horn of Y, componentwise f_{n-1}
        std::vector<Elem> lf(hx.limit->tuples.size());
        std::vector<Elem> t(w);
        for (Elem h = 0; h < lf.size(); ++h) {
          Elem const* src = hx.limit->tuple(h);
          for (size_t c = 0; c < w; ++c) {
            t[c] = f[n - 1](src[c]);
          }
          size_t pos = hy.limit->find(t);
          if (pos == TupleIndex::npos) {
            fail(Errc::property_violation, "horn image leaves the target horn object");
          }
          lf[h] = static_cast<Elem>(pos);
        }
        // |Lambda(X) x_{Lambda(Y)} Y_n| = sum over horns of Y of fiber products
        std::vector<size_t> from_x(hy.limit->tuples.size(), 0);
        std::vector<size_t> from_y(hy.limit->tuples.size(), 0);
        for (Elem v : lf) {
          ++from_x[v];
        }
        for (Elem v : hy.comparison->map()) {
          ++from_y[v];
        }
        size_t pb = 0;
        for (size_t v = 0; v < from_x.size(); ++v) {
          pb += from_x[v] * from_y[v];
        }
        std::unordered_set<uint64_t> seen;
        auto const&                  lx = hx.comparison->map();
        for (Elem e = 0; e < x->level(n)->size(); ++e) {
          seen.insert((uint64_t(lx[e]) << 32) | f[n](e));
        }
        size_t im = seen.size();
        r.entries.push_back({n, k, pb, im, im == pb, im == pb && im == x->level(n)->size()});
      }
    }
    return r;
  }

  bool exactness_check(SimplicialPtr const& x, unsigned n, size_t budget) {
    if (n < 2 || n > x->truncation()) {
      fail(Errc::precondition_unmet, "exactness needs 2 <= n <= truncation");
    }
    FaceLimit k = simplicial_kernel(x, n, budget);
    return k.comparison->is_surjective();
  }

}  // namespace simal
