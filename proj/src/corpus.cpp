#include "simal/corpus.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "simal/constructions.hpp"
#include "simal/error.hpp"
#include "simal/galois.hpp"

namespace simal::corpus {

  namespace {

    std::string const group_term   = "mul(mul(x,inv(y)),z)";
    std::string const module_term  = "add(add(x,neg(y)),z)";
    std::string const heyting_term = "meet(join(x,z),imp(y,meet(x,z)))";

    Signature module_signature() {
      return Signature({{"add", 2}, {"neg", 1}, {"zero", 0}});
    }

    Signature group_signature() {
      return Signature({{"mul", 2}, {"inv", 1}, {"e", 0}});
    }

    SimplicialPtr renamed(SimplicialPtr const& x, std::string name) {
      return TruncatedSimplicialAlgebra::trusted(
          std::move(name), x->levels(), x->faces(), x->degeneracies());
    }

    struct GroupOps {
      size_t mul, inv, unit;
    };

    GroupOps group_ops(AlgebraPtr const& a) {
      std::optional<size_t> mul, inv, unit;
      for (size_t op = 0; op < a->signature().size(); ++op) {
        unsigned ar = a->signature()[op].arity;
        auto&    slot = ar == 2 ? mul : ar == 1 ? inv : unit;
        if (ar > 2 || slot) {
          fail(Errc::invalid_parameters, a->name() + ": not a group signature");
        }
        slot = op;
      }
      if (!mul || !inv || !unit) {
        fail(Errc::invalid_parameters, a->name() + ": not a group signature");
      }
      return {*mul, *inv, *unit};
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Algebras
  ////////////////////////////////////////////////////////////////////////

  AlgebraPtr cyclic_group(unsigned k) {
    return zk_module(k, 1);
  }

  AlgebraPtr zk_module(unsigned k, unsigned rank) {
    if (k < 1 || rank < 1 || checked_power(k, rank) > 256) {
      fail(Errc::invalid_parameters, "Z_k module needs k >= 1, rank >= 1, at most 256 elements");
    }
    size_t const n = checked_power(k, rank);
    auto digits = [&](Elem x) {
      std::vector<unsigned> d(rank);
      for (unsigned i = 0; i < rank; ++i) {
        d[i] = x % k;
        x /= k;
      }
      return d;
    };
    auto pack = [&](std::vector<unsigned> const& d) {
      Elem x = 0;
      for (unsigned i = rank; i-- > 0;) {
        x = x * k + d[i];
      }
      return x;
    };
    std::vector<std::vector<Elem>> tables(3);
    tables[0].resize(n * n);
    tables[1].resize(n);
    tables[2] = {0};
    for (Elem a = 0; a < n; ++a) {
      auto da = digits(a);
      for (Elem b = 0; b < n; ++b) {
        auto db = digits(b);
        std::vector<unsigned> s(rank);
        for (unsigned i = 0; i < rank; ++i) {
          s[i] = (da[i] + db[i]) % k;
        }
        tables[0][a * n + b] = pack(s);
      }
      std::vector<unsigned> m(rank);
      for (unsigned i = 0; i < rank; ++i) {
        m[i] = (k - da[i]) % k;
      }
      tables[1][a] = pack(m);
    }
    std::string name = "Z" + std::to_string(k) + (rank > 1 ? "^" + std::to_string(rank) : "");
    return FiniteAlgebra::make(name, module_signature(), n, std::move(tables), module_term);
  }

  AlgebraPtr make_group(std::string name, std::vector<std::vector<Elem>> const& mul) {
    size_t const n = mul.size();
    for (auto const& row : mul) {
      if (row.size() != n || std::any_of(row.begin(), row.end(), [&](Elem v) { return v >= n; })) {
        fail(Errc::invalid_parameters, name + ": multiplication table is not square");
      }
    }
    std::optional<Elem> unit;
    for (Elem e = 0; e < n && !unit; ++e) {
      bool ok = true;
      for (Elem a = 0; a < n && ok; ++a) {
        ok = mul[e][a] == a && mul[a][e] == a;
      }
      if (ok) {
        unit = e;
      }
    }
    if (!unit) {
      fail(Errc::invalid_parameters, name + ": no identity element");
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) {
            fail(Errc::invalid_parameters, name + ": not associative");
          }
        }
      }
    }
    std::vector<std::vector<Elem>> tables(3);
    tables[0].reserve(n * n);
    for (auto const& row : mul) {
      tables[0].insert(tables[0].end(), row.begin(), row.end());
    }
    tables[1].assign(n, UINT32_MAX);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (mul[a][b] == *unit && mul[b][a] == *unit) {
          tables[1][a] = b;
        }
      }
      if (tables[1][a] == UINT32_MAX) {
        fail(Errc::invalid_parameters, name + ": element without inverse");
      }
    }
    tables[2] = {*unit};
    return FiniteAlgebra::make(std::move(name), group_signature(), n, std::move(tables), group_term);
  }

  AlgebraPtr cyclic_group_mul(unsigned k) {
    std::vector<std::vector<Elem>> mul(k, std::vector<Elem>(k));
    for (Elem a = 0; a < k; ++a) {
      for (Elem b = 0; b < k; ++b) {
        mul[a][b] = (a + b) % k;
      }
    }
    return make_group("C" + std::to_string(k), mul);
  }

  AlgebraPtr dihedral_group(unsigned n) {
    if (n < 1 || n > 8) {
      fail(Errc::invalid_parameters, "dihedral group needs 1 <= n <= 8");
    }
    std::vector<std::vector<Elem>> mul(2 * n, std::vector<Elem>(2 * n));
    for (Elem x = 0; x < 2 * n; ++x) {
      for (Elem y = 0; y < 2 * n; ++y) {
        unsigned i = x % n, a = x / n, k = y % n, b = y / n;
        unsigned r = a ? (i + n - k) % n : (i + k) % n;
        mul[x][y]  = r + n * ((a + b) % 2);
      }
    }
    return make_group("D" + std::to_string(n), mul);
  }

  AlgebraPtr symmetric_group_3() {
    auto d3 = dihedral_group(3);
    return make_group("S3", [&] {
      std::vector<std::vector<Elem>> mul(6, std::vector<Elem>(6));
      for (Elem a = 0; a < 6; ++a) {
        for (Elem b = 0; b < 6; ++b) {
          mul[a][b] = d3->apply(0, {a, b});
        }
      }
      return mul;
    }());
  }

  AlgebraPtr heyting_from_poset(std::string name, std::vector<std::vector<bool>> const& leq) {
    size_t const n = leq.size();
    if (n == 0) {
      fail(Errc::invalid_parameters, name + ": empty order");
    }
    for (size_t a = 0; a < n; ++a) {
      if (leq[a].size() != n || !leq[a][a]) {
        fail(Errc::invalid_parameters, name + ": order matrix is not reflexive");
      }
      for (size_t b = 0; b < n; ++b) {
        if (a != b && leq[a][b] && leq[b][a]) {
          fail(Errc::invalid_parameters, name + ": order is not antisymmetric");
        }
        for (size_t c = 0; c < n; ++c) {
          if (leq[a][b] && leq[b][c] && !leq[a][c]) {
            fail(Errc::invalid_parameters, name + ": order is not transitive");
          }
        }
      }
    }
    // greatest element of a set under leq, if there is one
    auto greatest = [&](std::vector<Elem> const& set) -> std::optional<Elem> {
      for (Elem g : set) {
        if (std::all_of(set.begin(), set.end(), [&](Elem x) { return leq[x][g]; })) {
          return g;
        }
      }
      return std::nullopt;
    };
    auto least = [&](std::vector<Elem> const& set) -> std::optional<Elem> {
      for (Elem g : set) {
        if (std::all_of(set.begin(), set.end(), [&](Elem x) { return leq[g][x]; })) {
          return g;
        }
      }
      return std::nullopt;
    };
    std::vector<std::vector<Elem>> tables(5);
    for (auto& t : tables) {
      t.resize(n * n);
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        std::vector<Elem> lower, upper;
        for (Elem c = 0; c < n; ++c) {
          if (leq[c][a] && leq[c][b]) {
            lower.push_back(c);
          }
          if (leq[a][c] && leq[b][c]) {
            upper.push_back(c);
          }
        }
        auto m = greatest(lower), j = least(upper);
        if (!m || !j) {
          fail(Errc::invalid_parameters, name + ": order is not a lattice");
        }
        tables[0][a * n + b] = *m;
        tables[1][a * n + b] = *j;
      }
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        std::vector<Elem> cands;
        for (Elem c = 0; c < n; ++c) {
          if (leq[tables[0][c * n + a]][b]) {
            cands.push_back(c);
          }
        }
        auto i = greatest(cands);
        if (!i) {
          fail(Errc::invalid_parameters,
               name + ": no implication for " + std::to_string(a) + " -> " + std::to_string(b));
        }
        tables[2][a * n + b] = *i;
      }
    }
    std::vector<Elem> all(n);
    for (Elem a = 0; a < n; ++a) {
      all[a] = a;
    }
    tables[2].resize(n * n);
    tables[3] = {*least(all)};
    tables[4] = {*greatest(all)};
    Signature sig({{"meet", 2}, {"join", 2}, {"imp", 2}, {"bot", 0}, {"top", 0}});
    return FiniteAlgebra::make(std::move(name), sig, n, std::move(tables), heyting_term);
  }

  AlgebraPtr heyting_chain(unsigned k) {
    std::vector<std::vector<bool>> leq(k, std::vector<bool>(k));
    for (unsigned a = 0; a < k; ++a) {
      for (unsigned b = 0; b < k; ++b) {
        leq[a][b] = a <= b;
      }
    }
    return heyting_from_poset("H" + std::to_string(k), leq);
  }

  AlgebraPtr heyting_boolean(unsigned atoms) {
    unsigned const                 n = 1u << atoms;
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    for (unsigned a = 0; a < n; ++a) {
      for (unsigned b = 0; b < n; ++b) {
        leq[a][b] = (a & b) == a;
      }
    }
    return heyting_from_poset("B" + std::to_string(n), leq);
  }

  std::vector<Congruence> enumerate_congruences(AlgebraPtr const& a, size_t budget) {
    if (a->size() > 16) {
      fail(Errc::budget_exceeded, a->name() + ": congruence enumeration is limited to 16 elements");
    }
    std::set<std::vector<Elem>> seen;
    std::vector<Congruence>     all, principal;
    auto                        add = [&](Congruence c) {
      if (seen.insert(c.blocks()).second) {
        if (all.size() >= budget) {
          fail(Errc::budget_exceeded, a->name() + ": congruence lattice exceeds the budget");
        }
        all.push_back(std::move(c));
        return true;
      }
      return false;
    };
    add(Congruence::identity(a));
    for (Elem x = 0; x < a->size(); ++x) {
      for (Elem y = x + 1; y < a->size(); ++y) {
        Congruence c = Congruence::generated(a, {{x, y}});
        if (add(c)) {
          principal.push_back(c);
        }
      }
    }
    // every congruence is a join of principal ones
    for (size_t i = 1; i < all.size(); ++i) {
      for (size_t p = 0; p < principal.size(); ++p) {
        add(join(all[i], principal[p]));
      }
    }
    std::sort(all.begin(), all.end(), [](Congruence const& x, Congruence const& y) {
      size_t bx = x.num_blocks(), by = y.num_blocks();
      return bx != by ? bx > by : x.blocks() < y.blocks();
    });
    return all;
  }

  Congruence coset_congruence(AlgebraPtr const& a, Elem g) {
    auto const& sig = a->signature();
    for (size_t op = 0; op < sig.size(); ++op) {
      if (sig[op].arity == 0) {
        return Congruence::generated(a, {{a->table(op)[0], g}});
      }
    }
    fail(Errc::invalid_parameters, a->name() + ": no constant to take cosets of");
  }

  ////////////////////////////////////////////////////////////////////////
  // Groupoids
  ////////////////////////////////////////////////////////////////////////

  InternalGroupoid congruence_groupoid(Congruence const& theta) {
    AlgebraPtr const& a = theta.algebra();
    LimitPtr          P = product(a, a);
    std::vector<Elem> members;
    for (Elem e = 0; e < P->tuples.size(); ++e) {
      if (theta.related(P->tuple(e)[0], P->tuple(e)[1])) {
        members.push_back(e);
      }
    }
    Subalgebra        S = subalgebra_on(P->algebra, members);
    AlgebraPtr        x1 = FiniteAlgebra::make_trusted(
        "Eq_" + a->name() + "[" + std::to_string(theta.num_blocks()) + "]", a->signature(),
        members.size(), [&] {
          std::vector<std::vector<Elem>> t;
          for (size_t op = 0; op < a->signature().size(); ++op) {
            t.push_back(S.algebra->table(op));
          }
          return t;
        }(), a->maltsev_term());
    std::vector<Elem> d0(members.size()), d1(members.size()), s0(a->size());
    for (Elem k = 0; k < members.size(); ++k) {
      Elem const* t = P->tuple(members[k]);
      d1[k]         = t[0];
      d0[k]         = t[1];
      if (t[0] == t[1]) {
        s0[t[0]] = k;
      }
    }
    return InternalGroupoid::from_graph(a, x1, Homomorphism::trusted(x1, a, d0),
                                        Homomorphism::trusted(x1, a, d1),
                                        Homomorphism::trusted(a, x1, s0));
  }

  InternalGroupoid pair_groupoid(AlgebraPtr const& a) {
    return congruence_groupoid(Congruence::all(a));
  }

  InternalGroupoid discrete_groupoid(AlgebraPtr const& a) {
    auto id = Homomorphism::identity(a);
    return InternalGroupoid::from_graph(a, a, id, id, id);
  }

  CrossedModule a3_in_s3() {
    auto s3 = symmetric_group_3();
    auto a3 = cyclic_group_mul(3);
    // rotations r^i sit at index i in S3
    CrossedModule c{a3, s3, {0, 1, 2}, {}};
    for (Elem g = 0; g < 6; ++g) {
      std::vector<Elem> act(3);
      Elem              gi = s3->apply(1, {g});
      for (Elem t = 0; t < 3; ++t) {
        act[t] = s3->apply(0, {s3->apply(0, {g, t}), gi});
      }
      c.action.push_back(act);
    }
    return c;
  }

  CrossedModule z3_by_z2() {
    CrossedModule c{cyclic_group_mul(3), cyclic_group_mul(2), {0, 0, 0}, {{0, 1, 2}, {0, 2, 1}}};
    return c;
  }

  CrossedModule one_object(unsigned k) {
    auto t = cyclic_group(k);
    std::vector<Elem> id(k);
    for (Elem x = 0; x < k; ++x) {
      id[x] = x;
    }
    return {t, cyclic_group(1), std::vector<Elem>(k, 0), {id}};
  }

  InternalGroupoid crossed_module_groupoid(CrossedModule const& c) {
    if (!(c.t->signature() == c.g->signature())) {
      fail(Errc::invalid_parameters, "crossed module groups need one signature");
    }
    GroupOps     o  = group_ops(c.g);
    size_t const nt = c.t->size(), ng = c.g->size();
    auto tm = [&](Elem a, Elem b) { return c.t->apply(o.mul, {a, b}); };
    auto gm = [&](Elem a, Elem b) { return c.g->apply(o.mul, {a, b}); };
    auto ti = [&](Elem a) { return c.t->apply(o.inv, {a}); };
    auto gi = [&](Elem a) { return c.g->apply(o.inv, {a}); };
    Elem const t1 = c.t->table(o.unit)[0], g1 = c.g->table(o.unit)[0];

    if (c.action.size() != ng) {
      fail(Errc::invalid_parameters, "action needs one row per element of the acting group");
    }
    Homomorphism bd;
    try {
      bd = Homomorphism::create(c.t, c.g, c.boundary);
    } catch (Error const& e) {
      fail(Errc::invalid_parameters, std::string("boundary: ") + e.what());
    }
    for (Elem g = 0; g < ng; ++g) {
      try {
        if (!Homomorphism::create(c.t, c.t, c.action[g]).is_bijective()) {
          fail(Errc::invalid_parameters, "not bijective");
        }
      } catch (Error const& e) {
        fail(Errc::invalid_parameters,
             "action of " + std::to_string(g) + " is not an automorphism: " + e.what());
      }
    }
    for (Elem t = 0; t < nt; ++t) {
      if (c.action[g1][t] != t) {
        fail(Errc::invalid_parameters, "identity does not act trivially");
      }
      for (Elem g = 0; g < ng; ++g) {
        for (Elem h = 0; h < ng; ++h) {
          if (c.action[g][c.action[h][t]] != c.action[gm(g, h)][t]) {
            fail(Errc::invalid_parameters, "action is not compatible with multiplication");
          }
        }
        if (bd(c.action[g][t]) != gm(gm(g, bd(t)), gi(g))) {
          fail(Errc::invalid_parameters,
               "boundary is not equivariant at g=" + std::to_string(g) + " t=" + std::to_string(t));
        }
      }
      for (Elem u = 0; u < nt; ++u) {
        if (c.action[bd(t)][u] != tm(tm(t, u), ti(t))) {
          fail(Errc::invalid_parameters,
               "Peiffer identity fails at t=" + std::to_string(t) + " u=" + std::to_string(u));
        }
      }
    }

    size_t const                   n   = nt * ng;
    auto                           idx = [&](Elem t, Elem g) { return static_cast<Elem>(t * ng + g); };
    std::vector<std::vector<Elem>> tables(c.g->signature().size());
    tables[o.mul].resize(n * n);
    tables[o.inv].resize(n);
    tables[o.unit] = {idx(t1, g1)};
    for (Elem x = 0; x < n; ++x) {
      Elem t = x / ng, g = x % ng;
      for (Elem y = 0; y < n; ++y) {
        Elem u = y / ng, h = y % ng;
        tables[o.mul][x * n + y] = idx(tm(t, c.action[g][u]), gm(g, h));
      }
      tables[o.inv][x] = idx(c.action[gi(g)][ti(t)], gi(g));
    }
    auto x1 = FiniteAlgebra::make(c.t->name() + "x|" + c.g->name(), c.g->signature(), n,
                                  std::move(tables), c.g->maltsev_term());
    std::vector<Elem> d0(n), d1(n), s0(ng);
    for (Elem x = 0; x < n; ++x) {
      d0[x] = x % ng;
      d1[x] = gm(bd(x / ng), x % ng);
    }
    for (Elem g = 0; g < ng; ++g) {
      s0[g] = idx(t1, g);
    }
    try {
      return InternalGroupoid::from_graph(c.g, x1, Homomorphism::create(x1, c.g, d0),
                                          Homomorphism::create(x1, c.g, d1),
                                          Homomorphism::create(c.g, x1, s0));
    } catch (Error const& e) {
      fail(Errc::invalid_parameters, std::string("crossed module data: ") + e.what());
    }
  }

  SimplicialPtr congruence_nerve(Congruence const& theta, unsigned level) {
    return nerve(congruence_groupoid(theta), level);
  }

  ////////////////////////////////////////////////////////////////////////
  // Extensions
  ////////////////////////////////////////////////////////////////////////

  SimplicialMorphism random_quotient_extension(SimplicialPtr const& x, Rng& rng) {
    unsigned const N = x->truncation();
    SimplicialQuotient q;
    // retry a few times for a quotient that is neither the identity nor a point
    for (int attempt = 0; attempt < 16; ++attempt) {
      unsigned const n = static_cast<unsigned>(rng.below(N + 1));
      size_t const   m = x->level(n)->size();
      Elem           a = static_cast<Elem>(rng.below(m)), b = static_cast<Elem>(rng.below(m));
      std::vector<std::vector<std::pair<Elem, Elem>>> pairs(N + 1);
      pairs[n].emplace_back(a, b);
      auto theta = simplicial_congruence_generated(x, pairs);
      q          = levelwise_quotient(x, theta);
      if (!theta[N].is_identity() && q.object->level(N)->size() > 1) {
        break;
      }
    }
    return q.projection;
  }

  SimplicialMorphism product_projection(SimplicialPtr const& x, SimplicialPtr const& y) {
    return simplicial_product(x, y).projections[0];
  }

  Profile parse_profile(std::string const& text) {
    if (text == "desk") {
      return Profile::desk;
    }
    if (text == "deep") {
      return Profile::deep;
    }
    fail(Errc::invalid_parameters, "unknown profile " + text);
  }

  Object const& Corpus::object(std::string const& name) const {
    for (auto const& o : objects) {
      if (o.name == name) {
        return o;
      }
    }
    for (auto const& o : small_nerves) {
      if (o.name == name) {
        return o;
      }
    }
    fail(Errc::invalid_parameters, "no corpus object named " + name);
  }

  namespace {

    SimplicialPtr graph_of(std::string name, AlgebraPtr x0, AlgebraPtr x1,
                           std::vector<Elem> d0, std::vector<Elem> d1, std::vector<Elem> s0) {
      return make_graph(std::move(name), x0, x1, Homomorphism::create(x1, x0, std::move(d0)),
                        Homomorphism::create(x1, x0, std::move(d1)),
                        Homomorphism::create(x0, x1, std::move(s0)));
    }

    // x1 = x0 x x0 with d0 = d1 the first projection and s0 the diagonal
    // (or x -> (x, zero) when zero is given).
    SimplicialPtr fat_loop_graph(std::string name, AlgebraPtr x0, std::optional<Elem> zero) {
      LimitPtr          P = product(x0, x0);
      AlgebraPtr        x1 = P->algebra;
      std::vector<Elem> d(x1->size()), s(x0->size());
      for (Elem e = 0; e < x1->size(); ++e) {
        d[e] = P->tuple(e)[0];
      }
      for (Elem a = 0; a < x0->size(); ++a) {
        Elem t[2] = {a, zero ? *zero : a};
        s[a]      = static_cast<Elem>(P->find(t));
      }
      return graph_of(std::move(name), x0, x1, d, d, s);
    }

    // x1 = a, x0 = one point.
    SimplicialPtr point_graph(std::string name, AlgebraPtr a) {
      auto one = FiniteAlgebra::make_trusted(
          "1", a->signature(), 1,
          [&] {
            std::vector<std::vector<Elem>> t;
            for (auto const& op : a->signature()) {
              t.emplace_back(checked_power(1, op.arity), 0);
            }
            return t;
          }(),
          a->maltsev_term());
      Elem z = 0;
      for (size_t op = 0; op < a->signature().size(); ++op) {
        if (a->signature()[op].arity == 0) {
          z = a->table(op)[0];
        }
      }
      return graph_of(std::move(name), one, a, std::vector<Elem>(a->size(), 0),
                      std::vector<Elem>(a->size(), 0), {z});
    }

    // Z2 x Z4 => Z2 with d0 (a, b) = a, d1 (a, b) = a + b mod 2, s0 a = (a, 0).
    SimplicialPtr parity_graph(AlgebraPtr const& z2, AlgebraPtr const& z4) {
      LimitPtr          P = product(z2, z4);
      std::vector<Elem> d0(8), d1(8), s0(2);
      for (Elem e = 0; e < 8; ++e) {
        d0[e] = P->tuple(e)[0];
        d1[e] = (P->tuple(e)[0] + P->tuple(e)[1]) % 2;
      }
      for (Elem a = 0; a < 2; ++a) {
        Elem t[2] = {a, 0};
        s0[a]     = static_cast<Elem>(P->find(t));
      }
      return graph_of("Z2xZ4 => Z2", z2, P->algebra, d0, d1, s0);
    }

  }  // namespace

  Corpus default_corpus(Profile profile, std::uint64_t seed) {
    Corpus c;
    c.profile    = profile;
    c.seed       = seed;
    bool const deep = profile == Profile::deep;

    auto z2 = cyclic_group(2), z3 = cyclic_group(3), z4 = cyclic_group(4), z6 = cyclic_group(6);
    auto v4 = zk_module(2, 2), z2cube = zk_module(2, 3), z3sq = zk_module(3, 2);
    auto z2z4 = product(z2, z4)->algebra;
    auto s3 = symmetric_group_3(), d4 = dihedral_group(4), d6 = dihedral_group(6);
    auto c2 = cyclic_group_mul(2);
    auto h2 = heyting_chain(2), h3 = heyting_chain(3), h4 = heyting_chain(4);
    auto b4 = heyting_boolean(2), b8 = heyting_boolean(3);
    c.algebras = {z2, z3, z4, z6, v4, z2cube, z3sq, z2z4, s3, d4, d6, c2, h2, h3, h4, b4, b8};
    if (deep) {
      c.algebras.push_back(cyclic_group(12));
      c.algebras.push_back(zk_module(2, 4));
      c.algebras.push_back(dihedral_group(8));
    }

    auto add = [&](std::string name, SimplicialPtr x, bool is_nerve) {
      c.objects.push_back({name, renamed(x, name), is_nerve});
    };
    auto add_nerve = [&](std::string name, InternalGroupoid const& g, unsigned level) {
      add(std::move(name), nerve(g, level), true);
    };

    unsigned const top = 3;
    add_nerve("N(pair Z2)", pair_groupoid(z2), top);
    add_nerve("N(pair Z3)", pair_groupoid(z3), top);
    add_nerve("N(Z6 mod <2>)", congruence_groupoid(coset_congruence(z6, 2)), top);
    add_nerve("N(Z6 mod <3>)", congruence_groupoid(coset_congruence(z6, 3)), top);
    add_nerve("N(D4 mod center)", congruence_groupoid(coset_congruence(d4, 2)), top);
    add_nerve("N(S3 mod A3)", congruence_groupoid(coset_congruence(s3, 1)), top);
    add_nerve("N(A3 in S3)", crossed_module_groupoid(a3_in_s3()), top);
    add_nerve("N(Z3 x| Z2)", crossed_module_groupoid(z3_by_z2()), top);
    add_nerve("N(one-object Z2)", crossed_module_groupoid(one_object(2)), top);
    add_nerve("N(one-object Z3)", crossed_module_groupoid(one_object(3)), top);
    add_nerve("N(one-object Z4)", crossed_module_groupoid(one_object(4)), top);
    add_nerve("N(discrete Z4)", discrete_groupoid(z4), top);
    add_nerve("N(pair H2)", pair_groupoid(h2), top);
    add_nerve("N(pair H3)", pair_groupoid(h3), top);
    add_nerve("N(B4 mod atom)", congruence_groupoid(Congruence::generated(b4, {{0, 1}})), top);
    add_nerve("N(pair V4)", pair_groupoid(v4), top);
    add("const(Z3)", constant_object(z3, top), false);
    add("const(S3)", constant_object(s3, top), false);
    add("const(H3)", constant_object(h3, top), false);

    add("cosk(V4 => Z2)", coskeleton(fat_loop_graph("V4 => Z2", z2, Elem{0}), top), false);
    add("cosk(S3 => 1)", coskeleton(point_graph("S3 => 1", s3), 2), false);
    add("cosk(Z2 => 1)", coskeleton(point_graph("Z2 => 1", z2), top), false);
    add("cosk(H2xH2 => H2)", coskeleton(fat_loop_graph("H2xH2 => H2", h2, std::nullopt), top),
        false);
    add("cosk(H3xH3 => H3)", coskeleton(fat_loop_graph("H3xH3 => H3", h3, std::nullopt), top),
        false);

    std::vector<Extension> counits;
    auto dec_of = [&](std::string name, InternalGroupoid const& g) {
      Decalage d   = decalage(nerve(g, top + 1));
      auto     obj = renamed(d.object, name);
      c.objects.push_back({name, obj, false});
      // the counit lands in the truncation to level 3 of the level-4 nerve
      counits.push_back({"counit " + name,
                         SimplicialMorphism::trusted(obj, d.counit.cod(), d.counit.components())});
    };
    dec_of("Dec N(one-object Z4)", crossed_module_groupoid(one_object(4)));
    dec_of("Dec N(one-object Z2)", crossed_module_groupoid(one_object(2)));
    dec_of("Dec N(pair Z2)", pair_groupoid(z2));

    add("Sk1(V4 => Z2)", sk1_module_variety(fat_loop_graph("V4 => Z2", z2, Elem{0})), false);
    add("Sk1(Z3 => 0)", sk1_module_variety(point_graph("Z3 => 0", z3)), false);
    add("Sk1(Z2xZ4 => Z2)", sk1_module_variety(parity_graph(z2, z4)), false);

    add("cosk(Z2xZ4 => Z2)", coskeleton(parity_graph(z2, z4), top), false);
    add("N(pair Z2) x cosk(Z2 => 1)",
        simplicial_product(c.object("N(pair Z2)").x, c.object("cosk(Z2 => 1)").x).object, false);

    if (deep) {
      add_nerve("N(pair Z2) level 4", pair_groupoid(z2), 4);
      add_nerve("N(D6 mod center)", congruence_groupoid(coset_congruence(d6, 3)), top);
      add_nerve("N(pair Z3^2)", pair_groupoid(z3sq), top);
      add("cosk(Z3 => 1)", coskeleton(point_graph("Z3 => 1", z3), top), false);
    }

    Rng rng(seed);
    std::vector<std::string> quotient_sources = {
        "N(pair Z3)", "N(Z6 mod <2>)", "N(D4 mod center)", "N(A3 in S3)", "N(pair H3)",
        "cosk(V4 => Z2)", "cosk(H2xH2 => H2)", "Dec N(one-object Z4)", "Sk1(V4 => Z2)",
        "Sk1(Z2xZ4 => Z2)"};
    std::vector<Extension> quotients;
    for (auto const& src : quotient_sources) {
      auto f    = random_quotient_extension(c.object(src).x, rng);
      auto name = src + " / seeded";
      auto obj  = renamed(f.cod(), name);
      f         = SimplicialMorphism::trusted(f.dom(), obj, f.components());
      c.objects.push_back({name, obj, false});
      quotients.push_back({"quotient " + src, f});
    }

    // extensions
    for (auto const& q : quotients) {
      c.extensions.push_back(q);
    }
    for (auto const& name : {"N(pair Z2)", "cosk(V4 => Z2)", "Sk1(V4 => Z2)", "N(A3 in S3)",
                             "Dec N(one-object Z2)", "cosk(H2xH2 => H2)"}) {
      c.extensions.push_back({"identity " + std::string(name),
                              SimplicialMorphism::identity(c.object(name).x)});
    }
    for (auto const& name : {"N(pair Z2)", "N(one-object Z3)", "N(Z6 mod <3>)", "cosk(Z2 => 1)",
                             "N(pair H2)", "Dec N(one-object Z2)", "cosk(V4 => Z2)"}) {
      c.extensions.push_back({"terminal " + std::string(name), to_terminal(c.object(name).x)});
    }
    for (auto const& e : counits) {
      c.extensions.push_back(e);
    }
    auto const_z2  = constant_object(z2, top);
    auto const_h2  = constant_object(h2, top);
    auto add_proj = [&](std::string name, SimplicialPtr const& x, SimplicialPtr const& y) {
      c.extensions.push_back({"projection " + name, product_projection(x, y)});
    };
    add_proj("N(pair Z2) x const(Z2)", c.object("N(pair Z2)").x, const_z2);
    add_proj("cosk(V4 => Z2) x const(Z2)", c.object("cosk(V4 => Z2)").x, const_z2);
    add_proj("N(one-object Z2) x N(pair Z2)", c.object("N(one-object Z2)").x,
             c.object("N(pair Z2)").x);
    add_proj("cosk(H2xH2 => H2) x const(H2)", c.object("cosk(H2xH2 => H2)").x, const_h2);
    add_proj("N(Z3 x| Z2) x const(C2)", c.object("N(Z3 x| Z2)").x, constant_object(c2, top));

    // every proper quotient of two coskeleta; some are central without
    // being trivial
    for (auto const& name : {"cosk(Z2 => 1)", "cosk(V4 => Z2)"}) {
      SimplicialPtr const& x       = c.object(name).x;
      auto                 lattice = simplicial_congruences_below(to_terminal(x), 1000);
      for (size_t i = 1; i < lattice.size(); ++i) {
        if (!lattice[i].back().is_all()) {
          c.extensions.push_back({"lattice quotient " + std::to_string(i) + " of " + name,
                                  levelwise_quotient(x, lattice[i]).projection});
        }
      }
    }

    if (deep) {
      for (auto const& name : {"N(pair Z3)", "cosk(H3xH3 => H3)", "Dec N(one-object Z4)"}) {
        c.extensions.push_back({"second quotient " + std::string(name),
                                random_quotient_extension(c.object(name).x, rng)});
      }
    }

    // targets of the exhaustive universal-property sweep
    auto small = [&](std::string name, SimplicialPtr x) {
      c.small_nerves.push_back({name, renamed(x, name), true});
    };
    small("const(Z2) level 2", constant_object(z2, 2));
    small("const(Z4) level 2", constant_object(z4, 2));
    small("const(V4) level 2", constant_object(v4, 2));
    small("N(one-object Z2) level 2", nerve(crossed_module_groupoid(one_object(2)), 2));
    small("const(C2) level 2", constant_object(c2, 2));
    small("const(H2) level 2", constant_object(h2, 2));
    small("const(B4) level 2", constant_object(b4, 2));
    return c;
  }

  ////////////////////////////////////////////////////////////////////////
  // Generator dispatch
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::string> generator_kinds() {
    return {"cyclic_group",       "dihedral_group",     "symmetric_group_3",
            "zk_module",          "heyting_from_poset", "congruence_nerve",
            "pair_groupoid",      "discrete_groupoid",  "crossed_module_groupoid",
            "coskeleton_of_graph", "decalage_of",       "quotient_extension",
            "product_projection"};
  }

  namespace {

    unsigned param(GeneratorSpec const& s, size_t i, unsigned fallback) {
      if (i >= s.params.size()) {
        return fallback;
      }
      try {
        size_t used = 0;
        long   v    = std::stol(s.params[i], &used);
        if (used != s.params[i].size() || v < 0) {
          throw std::invalid_argument("");
        }
        return static_cast<unsigned>(v);
      } catch (std::exception const&) {
        fail(Errc::invalid_parameters, s.kind + ": parameter " + s.params[i] + " is not a count");
      }
    }

    std::string word(GeneratorSpec const& s, size_t i, std::string fallback) {
      return i < s.params.size() ? s.params[i] : fallback;
    }

  }  // namespace

  Artifact generate(GeneratorSpec const& s) {
    std::string const& k = s.kind;
    if (k == "cyclic_group") {
      return cyclic_group(param(s, 0, 4));
    }
    if (k == "dihedral_group") {
      return dihedral_group(param(s, 0, 4));
    }
    if (k == "symmetric_group_3") {
      return symmetric_group_3();
    }
    if (k == "zk_module") {
      return zk_module(param(s, 0, 2), param(s, 1, 2));
    }
    if (k == "heyting_from_poset") {
      std::string shape = word(s, 0, "chain");
      if (shape == "chain") {
        return heyting_chain(param(s, 1, 2));
      }
      if (shape == "boolean") {
        return heyting_boolean(param(s, 1, 2));
      }
      fail(Errc::invalid_parameters, "heyting_from_poset shape is chain or boolean");
    }
    if (k == "congruence_nerve") {
      // congruence_nerve k g level: Z_k modulo the subgroup generated by g
      auto z = cyclic_group(param(s, 0, 6));
      return congruence_nerve(coset_congruence(z, param(s, 1, 3) % z->size()), param(s, 2, 3));
    }
    if (k == "pair_groupoid") {
      return nerve(pair_groupoid(cyclic_group(param(s, 0, 2))), param(s, 1, 3));
    }
    if (k == "discrete_groupoid") {
      return nerve(discrete_groupoid(cyclic_group(param(s, 0, 2))), param(s, 1, 3));
    }
    if (k == "crossed_module_groupoid") {
      std::string which = word(s, 0, "a3_in_s3");
      unsigned    level = param(s, which == "one_object" ? 2 : 1, 3);
      if (which == "a3_in_s3") {
        return nerve(crossed_module_groupoid(a3_in_s3()), level);
      }
      if (which == "z3_by_z2") {
        return nerve(crossed_module_groupoid(z3_by_z2()), level);
      }
      if (which == "one_object") {
        return nerve(crossed_module_groupoid(one_object(param(s, 1, 2))), level);
      }
      fail(Errc::invalid_parameters, "crossed module is a3_in_s3, z3_by_z2 or one_object");
    }

    Corpus c = default_corpus(Profile::desk, s.seed);
    if (k == "coskeleton_of_graph") {
      return coskeleton(truncate(c.object(word(s, 0, "cosk(V4 => Z2)")).x, 1), param(s, 1, 3));
    }
    if (k == "decalage_of") {
      return decalage(c.object(word(s, 0, "N(one-object Z4)")).x).object;
    }
    if (k == "quotient_extension") {
      Rng rng(s.seed);
      return random_quotient_extension(c.object(word(s, 0, "N(pair Z3)")).x, rng);
    }
    if (k == "product_projection") {
      return product_projection(c.object(word(s, 0, "N(pair Z2)")).x,
                                c.object(word(s, 1, "const(Z3)")).x);
    }
    fail(Errc::invalid_parameters, "unknown generator kind " + k);
  }

}  // namespace simal::corpus
