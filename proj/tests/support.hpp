#pragma once

// Brute-force oracles used by the unit tests.  They share no code with the
// library beyond the algebra tables themselves.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "simal/algebra.hpp"
#include "simal/congruence.hpp"
#include "simal/homomorphism.hpp"

namespace oracle {

  using simal::AlgebraPtr;
  using simal::Elem;
  using Partition = std::vector<Elem>;  // least element of each class

  inline Partition canonical(std::vector<Elem> labels) {
    std::map<Elem, Elem> first;
    Partition            out(labels.size());
    for (Elem x = 0; x < labels.size(); ++x) {
      out[x] = first.emplace(labels[x], x).first->second;
    }
    return out;
  }

  // Every argument tuple of an operation, as a flat index decoded on demand.
  inline void for_each_args(size_t n, unsigned arity, std::function<void(std::vector<Elem>&)> f) {
    std::vector<Elem> args(arity, 0);
    while (true) {
      f(args);
      unsigned i = 0;
      while (i < arity && ++args[arity - 1 - i] == n) {
        args[arity - 1 - i] = 0;
        ++i;
      }
      if (i == arity) {
        return;
      }
    }
  }

  inline bool compatible(AlgebraPtr const& a, Partition const& p) {
    size_t const n = a->size();
    for (size_t op = 0; op < a->signature().size(); ++op) {
      unsigned const k = a->signature()[op].arity;
      for (unsigned pos = 0; pos < k; ++pos) {
        bool ok = true;
        for_each_args(n, k, [&](std::vector<Elem>& args) {
          if (!ok) {
            return;
          }
          Elem const keep = args[pos];
          Elem const base = a->apply(op, args);
          for (Elem y = 0; y < n && ok; ++y) {
            if (p[y] == p[keep]) {
              args[pos] = y;
              ok        = p[a->apply(op, args)] == p[base];
            }
          }
          args[pos] = keep;
        });
        if (!ok) {
          return false;
        }
      }
    }
    return true;
  }

  // All set partitions via restricted growth strings, filtered by
  // compatibility.  Feasible up to about 9 elements.
  inline std::vector<Partition> all_congruences(AlgebraPtr const& a) {
    size_t const           n = a->size();
    std::vector<Partition> out;
    std::vector<Elem>      rgs(n, 0);
    std::function<void(size_t, Elem)> go = [&](size_t i, Elem used) {
      if (i == n) {
        Partition p = canonical(rgs);
        if (compatible(a, p)) {
          out.push_back(p);
        }
        return;
      }
      for (Elem b = 0; b <= used; ++b) {
        rgs[i] = b;
        go(i + 1, std::max<Elem>(used, b + 1));
      }
    };
    if (n == 0) {
      return out;
    }
    rgs[0] = 0;
    go(1, 1);
    std::sort(out.begin(), out.end());
    return out;
  }

  inline Partition closure(std::vector<std::pair<Elem, Elem>> const& pairs, size_t n) {
    std::vector<Elem> parent(n);
    std::iota(parent.begin(), parent.end(), Elem{0});
    std::function<Elem(Elem)> find = [&](Elem x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (auto [x, y] : pairs) {
      Elem rx = find(x), ry = find(y);
      if (rx != ry) {
        parent[std::max(rx, ry)] = std::min(rx, ry);
      }
    }
    std::vector<Elem> lab(n);
    for (Elem x = 0; x < n; ++x) {
      lab[x] = find(x);
    }
    return canonical(lab);
  }

  inline std::vector<std::pair<Elem, Elem>> pairs_of(Partition const& p) {
    std::vector<std::pair<Elem, Elem>> out;
    for (Elem x = 0; x < p.size(); ++x) {
      for (Elem y = 0; y < p.size(); ++y) {
        if (p[x] == p[y]) {
          out.push_back({x, y});
        }
      }
    }
    return out;
  }

  // Smallest compatible equivalence containing the pairs, by iterating
  // translations to a fixpoint.
  inline Partition generated(AlgebraPtr const& a, std::vector<std::pair<Elem, Elem>> pairs) {
    size_t const n = a->size();
    Partition    p = closure(pairs, n);
    while (true) {
      std::vector<std::pair<Elem, Elem>> more = pairs_of(p);
      for (size_t op = 0; op < a->signature().size(); ++op) {
        unsigned const k = a->signature()[op].arity;
        for (unsigned pos = 0; pos < k; ++pos) {
          for_each_args(n, k, [&](std::vector<Elem>& args) {
            Elem const keep = args[pos];
            Elem const base = a->apply(op, args);
            for (Elem y = 0; y < n; ++y) {
              if (p[y] == p[keep]) {
                args[pos] = y;
                more.push_back({base, a->apply(op, args)});
              }
            }
            args[pos] = keep;
          });
        }
      }
      Partition q = closure(more, n);
      if (q == p) {
        return p;
      }
      p = q;
    }
  }

  // Term-condition commutator from its definition: M(alpha, beta) is the
  // subalgebra of A^4 generated by (a,a,b,b) for a alpha b and (c,d,c,d) for
  // c beta d, read as 2x2 matrices [[w,x],[y,z]]; [alpha,beta] is the least
  // delta with w delta x => y delta z on M.
  inline Partition tc_commutator(AlgebraPtr const& a, Partition const& alpha,
                                 Partition const& beta) {
    size_t const n = a->size();
    using Quad     = std::array<Elem, 4>;
    std::set<Quad>    m;
    std::vector<Quad> frontier;
    auto add = [&](Quad q) {
      if (m.insert(q).second) {
        frontier.push_back(q);
      }
    };
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (alpha[x] == alpha[y]) {
          add({x, x, y, y});
        }
        if (beta[x] == beta[y]) {
          add({x, y, x, y});
        }
      }
    }
    for (size_t op = 0; op < a->signature().size(); ++op) {
      if (a->signature()[op].arity == 0) {
        Elem c = a->table(op)[0];
        add({c, c, c, c});
      }
    }
    while (!frontier.empty()) {
      frontier.clear();
      std::vector<Quad> cur(m.begin(), m.end());
      for (size_t op = 0; op < a->signature().size(); ++op) {
        unsigned const k = a->signature()[op].arity;
        if (k == 0) {
          continue;
        }
        for_each_args(cur.size(), k, [&](std::vector<Elem>& pick) {
          Quad q;
          for (int c = 0; c < 4; ++c) {
            std::vector<Elem> args(k);
            for (unsigned i = 0; i < k; ++i) {
              args[i] = cur[pick[i]][c];
            }
            q[c] = a->apply(op, args);
          }
          add(q);
        });
      }
    }
    Partition delta = closure({}, n);
    while (true) {
      std::vector<std::pair<Elem, Elem>> need = pairs_of(delta);
      for (auto const& q : m) {
        if (delta[q[0]] == delta[q[1]]) {
          need.push_back({q[2], q[3]});
        }
      }
      Partition next = generated(a, need);
      if (next == delta) {
        return delta;
      }
      delta = next;
    }
  }

  inline Partition of(simal::Congruence const& c) {
    return c.blocks();
  }

}  // namespace oracle
