#include "simal/limits.hpp"

#include <algorithm>
#include <bit>

#include "simal/error.hpp"

namespace simal {

  ////////////////////////////////////////////////////////////////////////
  // TupleIndex
  ////////////////////////////////////////////////////////////////////////

  TupleIndex::TupleIndex(TupleSet const& set, std::vector<size_t> const& radices)
      : _width(set.width()) {
    unsigned total = 0;
    _shift.resize(_width);
    for (size_t c = 0; c < _width; ++c) {
      size_t   r    = std::max<size_t>(radices[c], 2);
      unsigned bits = std::bit_width(r - 1);
      _shift[c]     = total;
      total += bits;
    }
    _packed = total <= 64;
    if (_packed) {
      _small.reserve(set.size());
      for (size_t i = 0; i < set.size(); ++i) {
        _small.emplace(pack(set[i]), static_cast<uint32_t>(i));
      }
    } else {
      _wide.reserve(set.size());
      for (size_t i = 0; i < set.size(); ++i) {
        _wide.emplace(bytes(set[i]), static_cast<uint32_t>(i));
      }
    }
  }

  uint64_t TupleIndex::pack(Elem const* t) const {
    uint64_t key = 0;
    for (size_t c = 0; c < _width; ++c) {
      key |= uint64_t(t[c]) << _shift[c];
    }
    return key;
  }

  std::string TupleIndex::bytes(Elem const* t) const {
    return std::string(reinterpret_cast<char const*>(t), _width * sizeof(Elem));
  }

  size_t TupleIndex::find(Elem const* t) const {
    if (_packed) {
      auto it = _small.find(pack(t));
      return it == _small.end() ? npos : it->second;
    }
    auto it = _wide.find(bytes(t));
    return it == _wide.end() ? npos : it->second;
  }

  ////////////////////////////////////////////////////////////////////////
  // compatible_tuples
  ////////////////////////////////////////////////////////////////////////

  namespace {

    struct Side {
      Homomorphism const* map;
      size_t              key_size;

      Elem key(Elem v) const {
        return map ? (*map)(v) : v;
      }
    };

    struct Check {
      size_t other;  // earlier component (or the same one)
      Side   mine;
      Side   theirs;
    };

    struct Plan {
      std::vector<Check> checks;
      // bucket index for the first check against an earlier component
      bool                anchored = false;
      Check               anchor{};
      std::vector<size_t> offsets;
      std::vector<Elem>   values;
    };

    class Joiner {
     public:
      Joiner(std::vector<size_t> const&         sizes,
             std::vector<LinkConstraint> const& cs,
             size_t                             budget)
          : _sizes(sizes), _budget(budget), _plans(sizes.size()), _out(sizes.size()),
            _cur(sizes.size()) {
        auto side = [&](size_t comp, Homomorphism const* map) {
          return Side{map, map ? map->cod()->size() : sizes[comp]};
        };
        for (auto const& c : cs) {
          if (c.left >= sizes.size() || c.right >= sizes.size()) {
            fail(Errc::precondition_unmet, "constraint refers to a missing factor");
          }
          Side l = side(c.left, c.left_map);
          Side r = side(c.right, c.right_map);
          if (c.left >= c.right) {
            _plans[c.left].checks.push_back({c.right, l, r});
          } else {
            _plans[c.right].checks.push_back({c.left, r, l});
          }
        }
        for (size_t c = 0; c < sizes.size(); ++c) {
          Plan& p = _plans[c];
          for (size_t k = 0; k < p.checks.size(); ++k) {
            if (p.checks[k].other < c) {
              p.anchored = true;
              p.anchor   = p.checks[k];
              p.checks.erase(p.checks.begin() + k);
              break;
            }
          }
          if (p.anchored) {
            size_t keys = p.anchor.mine.key_size;
            p.offsets.assign(keys + 1, 0);
            for (Elem v = 0; v < sizes[c]; ++v) {
              ++p.offsets[p.anchor.mine.key(v) + 1];
            }
            for (size_t k = 0; k < keys; ++k) {
              p.offsets[k + 1] += p.offsets[k];
            }
            p.values.resize(sizes[c]);
            std::vector<size_t> fill(p.offsets.begin(), p.offsets.end() - 1);
            for (Elem v = 0; v < sizes[c]; ++v) {
              p.values[fill[p.anchor.mine.key(v)]++] = v;
            }
          }
        }
      }

      TupleSet run() {
        if (_sizes.empty()) {
          return _out;
        }
        descend(0);
        return std::move(_out);
      }

     private:
      bool admissible(size_t c, Elem v) const {
        for (auto const& chk : _plans[c].checks) {
          Elem other = chk.other == c ? v : _cur[chk.other];
          if (chk.mine.key(v) != chk.theirs.key(other)) {
            return false;
          }
        }
        return true;
      }

      void emit() {
        if (_out.size() >= _budget) {
          fail(Errc::level_too_large,
               "limit exceeds the size budget of " + std::to_string(_budget));
        }
        _out.push_back(_cur.data());
      }

      void descend(size_t c) {
        Plan const& p = _plans[c];
        auto        step = [&](Elem v) {
          if (!admissible(c, v)) {
            return;
          }
          _cur[c] = v;
          if (c + 1 == _sizes.size()) {
            emit();
          } else {
            descend(c + 1);
          }
        };
        if (p.anchored) {
          Elem key = p.anchor.theirs.key(_cur[p.anchor.other]);
          if (key >= p.anchor.mine.key_size) {
            return;
          }
          for (size_t i = p.offsets[key]; i < p.offsets[key + 1]; ++i) {
            step(p.values[i]);
          }
        } else {
          for (Elem v = 0; v < _sizes[c]; ++v) {
            step(v);
          }
        }
      }

      std::vector<size_t> _sizes;
      size_t              _budget;
      std::vector<Plan>   _plans;
      TupleSet            _out;
      std::vector<Elem>   _cur;
    };

  }  // namespace

  TupleSet compatible_tuples(std::vector<size_t> const&         factor_sizes,
                             std::vector<LinkConstraint> const& constraints,
                             size_t                             budget) {
    return Joiner(factor_sizes, constraints, budget).run();
  }

  ////////////////////////////////////////////////////////////////////////
  // make_limit
  ////////////////////////////////////////////////////////////////////////

  LimitPtr make_limit(std::string name, std::vector<AlgebraPtr> factors, TupleSet tuples) {
    if (factors.empty()) {
      fail(Errc::precondition_unmet, "limit with no factors");
    }
    Signature const& sig = factors[0]->signature();
    for (auto const& f : factors) {
      if (!(f->signature() == sig)) {
        fail(Errc::signature_mismatch, "limit factors have different signatures");
      }
    }
    size_t const        w = factors.size();
    size_t const        N = tuples.size();
    std::vector<size_t> radices(w);
    for (size_t c = 0; c < w; ++c) {
      radices[c] = factors[c]->size();
    }
    auto lim     = std::make_shared<LimitAlgebra>();
    lim->factors = factors;
    lim->index   = TupleIndex(tuples, radices);

    if (N == 0 && sig.has_constants()) {
      fail(Errc::inconsistent_constants,
           name + ": empty limit although the signature has constants");
    }

    std::vector<std::vector<Elem>> tables(sig.size());
    std::vector<Elem>              result(w);
    std::vector<Elem>              cargs;
    std::vector<size_t>            digits;
    for (size_t op = 0; op < sig.size(); ++op) {
      unsigned k     = sig[op].arity;
      size_t   total = checked_power(N, k);
      if (total > (size_t(1) << 28)) {
        fail(Errc::level_too_large,
             name + ": table of " + sig[op].name + " would be too large");
      }
      tables[op].resize(total);
      digits.assign(k, 0);
      cargs.resize(k);
      for (size_t idx = 0; idx < total; ++idx) {
        for (size_t c = 0; c < w; ++c) {
          for (unsigned i = 0; i < k; ++i) {
            cargs[i] = tuples[digits[i]][c];
          }
          result[c] = factors[c]->apply(op, cargs.data());
        }
        size_t pos = lim->index.find(result.data());
        if (pos == TupleIndex::npos) {
          fail(Errc::property_violation,
               name + ": tuple set is not closed under " + sig[op].name);
        }
        tables[op][idx] = static_cast<Elem>(pos);
        for (unsigned i = k; i-- > 0;) {
          if (++digits[i] < N) {
            break;
          }
          digits[i] = 0;
        }
      }
    }
    lim->algebra = FiniteAlgebra::make_trusted(
        std::move(name), sig, N, std::move(tables), factors[0]->maltsev_term());
    for (size_t c = 0; c < w; ++c) {
      std::vector<Elem> map(N);
      for (size_t i = 0; i < N; ++i) {
        map[i] = tuples[i][c];
      }
      lim->projections.push_back(
          Homomorphism::trusted(lim->algebra, factors[c], std::move(map)));
    }
    lim->tuples = std::move(tuples);
    return lim;
  }

  LimitPtr product(std::vector<AlgebraPtr> const& factors) {
    std::vector<size_t> sizes;
    std::string         name;
    for (auto const& f : factors) {
      sizes.push_back(f->size());
      name += (name.empty() ? "" : "x") + f->name();
    }
    return make_limit(name, factors, compatible_tuples(sizes, {}, SIZE_MAX));
  }

  LimitPtr product(AlgebraPtr a, AlgebraPtr b) {
    return product(std::vector<AlgebraPtr>{std::move(a), std::move(b)});
  }

  LimitPtr pullback(Homomorphism const& f, Homomorphism const& g, size_t budget) {
    if (f.cod()->size() != g.cod()->size()) {
      fail(Errc::precondition_unmet, "pullback of maps with different codomains");
    }
    auto tuples = compatible_tuples(
        {f.dom()->size(), g.dom()->size()}, {{0, &f, 1, &g}}, budget);
    return make_limit(f.dom()->name() + "x_" + f.cod()->name() + g.dom()->name(),
                      {f.dom(), g.dom()},
                      std::move(tuples));
  }

  LimitPtr finite_limit(FiniteDiagram const& d, size_t budget) {
    std::vector<size_t>         sizes;
    std::vector<LinkConstraint> cs;
    for (auto const& n : d.nodes) {
      sizes.push_back(n->size());
    }
    for (auto const& a : d.arrows) {
      if (a.from >= d.nodes.size() || a.to >= d.nodes.size()) {
        fail(Errc::precondition_unmet, "diagram arrow endpoint is not a node");
      }
      if (a.map.dom()->size() != d.nodes[a.from]->size()
          || a.map.cod()->size() != d.nodes[a.to]->size()) {
        fail(Errc::precondition_unmet, "diagram arrow does not match its nodes");
      }
      cs.push_back({a.from, &a.map, a.to, nullptr});
    }
    return make_limit("lim", d.nodes, compatible_tuples(sizes, cs, budget));
  }

  ////////////////////////////////////////////////////////////////////////
  // Quotients and subalgebras
  ////////////////////////////////////////////////////////////////////////

  Quotient quotient(AlgebraPtr a, Congruence const& theta) {
    size_t const      n = a->size();
    std::vector<Elem> rank(n, 0), reps;
    for (Elem x = 0; x < n; ++x) {
      if (theta.block(x) == x) {
        rank[x] = static_cast<Elem>(reps.size());
        reps.push_back(x);
      }
    }
    size_t const      m = reps.size();
    std::vector<Elem> map(n);
    for (Elem x = 0; x < n; ++x) {
      map[x] = rank[theta.block(x)];
    }
    Signature const&               sig = a->signature();
    std::vector<std::vector<Elem>> tables(sig.size());
    std::vector<Elem>              args;
    for (size_t op = 0; op < sig.size(); ++op) {
      unsigned k     = sig[op].arity;
      size_t   total = checked_power(m, k);
      tables[op].resize(total);
      args.resize(k);
      for (size_t idx = 0; idx < total; ++idx) {
        size_t rest = idx;
        for (unsigned i = k; i-- > 0;) {
          args[i] = reps[rest % m];
          rest /= m;
        }
        tables[op][idx] = map[a->apply(op, args.data())];
      }
    }
    auto q = FiniteAlgebra::make_trusted(
        a->name() + "/~", sig, m, std::move(tables), a->maltsev_term());
    return {q, Homomorphism::trusted(a, q, std::move(map))};
  }

  Subalgebra subalgebra_on(AlgebraPtr a, std::vector<Elem> const& members) {
    std::vector<Elem> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Elem> rank(a->size(), UINT32_MAX);
    for (Elem i = 0; i < sorted.size(); ++i) {
      rank[sorted[i]] = i;
    }
    size_t const                   m   = sorted.size();
    Signature const&               sig = a->signature();
    std::vector<std::vector<Elem>> tables(sig.size());
    std::vector<Elem>              args;
    for (size_t op = 0; op < sig.size(); ++op) {
      unsigned k     = sig[op].arity;
      size_t   total = checked_power(m, k);
      tables[op].resize(total);
      args.resize(k);
      for (size_t idx = 0; idx < total; ++idx) {
        size_t rest = idx;
        for (unsigned i = k; i-- > 0;) {
          args[i] = sorted[rest % m];
          rest /= m;
        }
        Elem r = rank[a->apply(op, args.data())];
        if (r == UINT32_MAX) {
          fail(Errc::property_violation,
               a->name() + ": subset is not closed under " + sig[op].name);
        }
        tables[op][idx] = r;
      }
    }
    if (m == 0 && sig.has_constants()) {
      fail(Errc::inconsistent_constants, "empty subalgebra with constants");
    }
    auto sub = FiniteAlgebra::make_trusted(
        a->name() + "_sub", sig, m, std::move(tables), a->maltsev_term());
    return {sub, Homomorphism::trusted(sub, a, sorted)};
  }

  Subalgebra subalgebra_generated(AlgebraPtr a, std::vector<Elem> const& gens) {
    std::vector<char> in(a->size(), 0);
    std::vector<Elem> members;
    auto              add = [&](Elem x) {
      if (!in[x]) {
        in[x] = 1;
        members.push_back(x);
      }
    };
    Signature const& sig = a->signature();
    for (size_t op = 0; op < sig.size(); ++op) {
      if (sig[op].arity == 0) {
        add(a->table(op)[0]);
      }
    }
    for (Elem g : gens) {
      add(g);
    }
    // semi-naive: each round only tuples touching an element added in the
    // previous round are new
    size_t            done = 0;
    std::vector<Elem> args;
    while (done < members.size()) {
      size_t const fresh_begin = done;
      size_t const fresh_end   = members.size();
      for (size_t op = 0; op < sig.size(); ++op) {
        unsigned k = sig[op].arity;
        if (k == 0) {
          continue;
        }
        size_t const m     = fresh_end;
        size_t       total = checked_power(m, k);
        args.resize(k);
        for (size_t idx = 0; idx < total; ++idx) {
          size_t rest  = idx;
          bool   fresh = false;
          for (unsigned i = k; i-- > 0;) {
            size_t j = rest % m;
            rest /= m;
            args[i] = members[j];
            fresh |= j >= fresh_begin;
          }
          if (fresh) {
            add(a->apply(op, args.data()));
          }
        }
      }
      done = fresh_end;
    }
    return subalgebra_on(std::move(a), members);
  }

}  // namespace simal
