#include "simal/congruence.hpp"

#include <unordered_map>

#include "simal/error.hpp"

namespace simal {

  std::vector<Elem> canonical_labels(std::vector<Elem> const& labels) {
    std::unordered_map<Elem, Elem> first;
    first.reserve(labels.size());
    std::vector<Elem> out(labels.size());
    for (Elem x = 0; x < labels.size(); ++x) {
      auto [it, inserted] = first.emplace(labels[x], x);
      out[x]              = it->second;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Congruence
  ////////////////////////////////////////////////////////////////////////

  Congruence Congruence::identity(AlgebraPtr a) {
    std::vector<Elem> b(a->size());
    for (Elem x = 0; x < b.size(); ++x) {
      b[x] = x;
    }
    return Congruence(std::move(a), std::move(b));
  }

  Congruence Congruence::all(AlgebraPtr a) {
    std::vector<Elem> b(a->size(), 0);
    return Congruence(std::move(a), std::move(b));
  }

  Congruence Congruence::trusted(AlgebraPtr a, std::vector<Elem> const& labels) {
    return Congruence(std::move(a), canonical_labels(labels));
  }

  Congruence Congruence::from_labels(AlgebraPtr a, std::vector<Elem> const& labels) {
    if (labels.size() != a->size()) {
      fail(Errc::malformed_table, "partition length differs from carrier size");
    }
    auto                               canon = canonical_labels(labels);
    std::vector<std::pair<Elem, Elem>> pairs;
    for (Elem x = 0; x < canon.size(); ++x) {
      if (canon[x] != x) {
        pairs.emplace_back(canon[x], x);
      }
    }
    Congruence gen = generated(a, pairs);
    if (gen.blocks() != canon) {
      for (Elem x = 0; x < canon.size(); ++x) {
        if (gen.block(x) != canon[x]) {
          fail(Errc::property_violation,
               "partition on " + a->name()
                   + " is not compatible with the operations; element "
                   + std::to_string(x) + " is forced into the class of "
                   + std::to_string(gen.block(x)));
        }
      }
    }
    return Congruence(std::move(a), std::move(canon));
  }

  Congruence Congruence::generated(AlgebraPtr                                a,
                                   std::vector<std::pair<Elem, Elem>> const& pairs) {
    CongruenceBuilder b(std::move(a));
    for (auto [x, y] : pairs) {
      b.add(x, y);
    }
    return b.result();
  }

  size_t Congruence::num_blocks() const {
    size_t c = 0;
    for (Elem x = 0; x < _block.size(); ++x) {
      c += (_block[x] == x);
    }
    return c;
  }

  size_t Congruence::pair_count() const {
    std::vector<size_t> sz(_block.size(), 0);
    for (Elem b : _block) {
      ++sz[b];
    }
    size_t total = 0;
    for (size_t s : sz) {
      total += s * s;
    }
    return total;
  }

  std::vector<std::vector<Elem>> Congruence::classes() const {
    std::vector<std::vector<Elem>> out;
    std::vector<size_t>            index(_block.size(), SIZE_MAX);
    for (Elem x = 0; x < _block.size(); ++x) {
      if (_block[x] == x) {
        index[x] = out.size();
        out.emplace_back();
      }
      out[index[_block[x]]].push_back(x);
    }
    return out;
  }

  bool Congruence::is_identity() const {
    for (Elem x = 0; x < _block.size(); ++x) {
      if (_block[x] != x) {
        return false;
      }
    }
    return true;
  }

  bool Congruence::is_all() const {
    for (Elem b : _block) {
      if (b != 0) {
        return false;
      }
    }
    return true;
  }

  bool Congruence::leq(Congruence const& that) const {
    // each class of this must sit inside one class of that; it suffices to
    // compare every element with the least member of its class
    for (Elem x = 0; x < _block.size(); ++x) {
      if (that._block[x] != that._block[_block[x]]) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // CongruenceBuilder
  ////////////////////////////////////////////////////////////////////////

  CongruenceBuilder::CongruenceBuilder(AlgebraPtr a)
      : _alg(std::move(a)), _parent(_alg->size()) {
    for (Elem x = 0; x < _parent.size(); ++x) {
      _parent[x] = x;
    }
  }

  CongruenceBuilder::CongruenceBuilder(Congruence const& start)
      : _alg(start.algebra()), _parent(start.blocks()) {}

  Elem CongruenceBuilder::find(Elem x) {
    while (_parent[x] != x) {
      _parent[x] = _parent[_parent[x]];
      x          = _parent[x];
    }
    return x;
  }

  bool CongruenceBuilder::unite(Elem a, Elem b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return false;
    }
    if (a < b) {
      _parent[b] = a;
    } else {
      _parent[a] = b;
    }
    return true;
  }

  void CongruenceBuilder::add(Elem a, Elem b) {
    if (!unite(a, b)) {
      return;
    }
    _new_unions.emplace_back(a, b);
    _queue.emplace_back(a, b);
    Signature const& sig = _alg->signature();
    size_t const     n   = _alg->size();
    while (!_queue.empty()) {
      auto [x, y] = _queue.back();
      _queue.pop_back();
      for (size_t op = 0; op < sig.size(); ++op) {
        unsigned k = sig[op].arity;
        if (k == 0) {
          continue;
        }
        auto const& table = _alg->table(op);
        for (unsigned i = 0; i < k; ++i) {
          size_t stride = checked_power(n, k - 1 - i);
          size_t outer  = checked_power(n, i);
          size_t span   = stride * n;
          for (size_t o = 0; o < outer; ++o) {
            size_t base0 = o * span;
            for (size_t r = 0; r < stride; ++r) {
              size_t base = base0 + r;
              Elem   u    = table[base + x * stride];
              Elem   v    = table[base + y * stride];
              if (u != v && unite(u, v)) {
                _new_unions.emplace_back(u, v);
                _queue.emplace_back(u, v);
              }
            }
          }
        }
      }
    }
  }

  Congruence CongruenceBuilder::result() {
    std::vector<Elem> labels(_parent.size());
    for (Elem x = 0; x < labels.size(); ++x) {
      labels[x] = find(x);
    }
    // roots are class minima because unite always keeps the smaller root
    return Congruence::trusted(_alg, labels);
  }

  ////////////////////////////////////////////////////////////////////////
  // Lattice operations
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void require_same_algebra(Congruence const& a, Congruence const& b) {
      if (a.size() != b.size()
          || (a.algebra() != b.algebra() && a.algebra() && b.algebra()
              && !same_signature(*a.algebra(), *b.algebra()))) {
        fail(Errc::precondition_unmet,
             "congruences live on different algebras");
      }
    }

    class UnionFind {
     public:
      explicit UnionFind(size_t n) : _p(n) {
        for (Elem x = 0; x < n; ++x) {
          _p[x] = x;
        }
      }

      Elem find(Elem x) {
        while (_p[x] != x) {
          _p[x] = _p[_p[x]];
          x     = _p[x];
        }
        return x;
      }

      void unite(Elem a, Elem b) {
        a = find(a);
        b = find(b);
        if (a < b) {
          _p[b] = a;
        } else if (b < a) {
          _p[a] = b;
        }
      }

      std::vector<Elem> labels() {
        std::vector<Elem> out(_p.size());
        for (Elem x = 0; x < out.size(); ++x) {
          out[x] = find(x);
        }
        return out;
      }

     private:
      std::vector<Elem> _p;
    };
  }  // namespace

  Congruence meet(Congruence const& a, Congruence const& b) {
    require_same_algebra(a, b);
    std::unordered_map<uint64_t, Elem> first;
    first.reserve(a.size());
    std::vector<Elem> out(a.size());
    for (Elem x = 0; x < a.size(); ++x) {
      uint64_t key        = (uint64_t(a.block(x)) << 32) | b.block(x);
      auto [it, inserted] = first.emplace(key, x);
      out[x]              = it->second;
    }
    return Congruence::trusted(a.algebra(), out);
  }

  Congruence join(Congruence const& a, Congruence const& b) {
    require_same_algebra(a, b);
    size_t const        n = a.size();
    std::vector<size_t> size_a(n, 0), size_b(n, 0);
    UnionFind           uf(n);
    for (Elem x = 0; x < n; ++x) {
      ++size_a[a.block(x)];
      ++size_b[b.block(x)];
      uf.unite(x, a.block(x));
      uf.unite(x, b.block(x));
    }
    // The composite a∘b is the disjoint union of A×B over pairs of an
    // a-class A and a b-class B that intersect.
    std::unordered_map<uint64_t, char> edges;
    edges.reserve(n);
    size_t composite = 0;
    for (Elem x = 0; x < n; ++x) {
      uint64_t key = (uint64_t(a.block(x)) << 32) | b.block(x);
      if (edges.emplace(key, 1).second) {
        composite += size_a[a.block(x)] * size_b[b.block(x)];
      }
    }
    auto                labels = uf.labels();
    std::vector<size_t> size_j(n, 0);
    for (Elem x = 0; x < n; ++x) {
      ++size_j[labels[x]];
    }
    size_t closure = 0;
    for (size_t s : size_j) {
      closure += s * s;
    }
    if (composite != closure) {
      fail(Errc::join_not_composite,
           "on " + (a.algebra() ? a.algebra()->name() : std::string("?"))
               + " the composite has " + std::to_string(composite)
               + " pairs but the transitive closure has "
               + std::to_string(closure));
    }
    return Congruence::trusted(a.algebra(), labels);
  }

  Congruence meet(std::vector<Congruence> const& cs) {
    Congruence r = cs.at(0);
    for (size_t i = 1; i < cs.size(); ++i) {
      r = meet(r, cs[i]);
    }
    return r;
  }

  Congruence join(std::vector<Congruence> const& cs) {
    Congruence r = cs.at(0);
    for (size_t i = 1; i < cs.size(); ++i) {
      r = join(r, cs[i]);
    }
    return r;
  }

  Congruence image_congruence(Homomorphism const& f, Congruence const& theta) {
    if (!f.is_surjective()) {
      fail(Errc::not_surjective,
           "image of a congruence along the non-surjective map "
               + f.dom()->name() + " -> " + f.cod()->name());
    }
    size_t const m = f.cod()->size();
    // images f(B) of the classes of theta, deduplicated
    auto                           cls = theta.classes();
    std::vector<std::vector<Elem>> img(cls.size());
    std::vector<size_t>            stamp(m, SIZE_MAX);
    UnionFind                      uf(m);
    for (size_t c = 0; c < cls.size(); ++c) {
      for (Elem x : cls[c]) {
        Elem y = f(x);
        if (stamp[y] != c) {
          stamp[y] = c;
          img[c].push_back(y);
          uf.unite(y, img[c][0]);
        }
      }
    }
    std::vector<std::vector<size_t>> touching(m);
    for (size_t c = 0; c < img.size(); ++c) {
      for (Elem y : img[c]) {
        touching[y].push_back(c);
      }
    }
    auto                labels = uf.labels();
    std::vector<size_t> size_j(m, 0);
    for (Elem y = 0; y < m; ++y) {
      ++size_j[labels[y]];
    }
    // the image relation is transitive iff every y is related to its whole
    // closure class directly
    std::fill(stamp.begin(), stamp.end(), SIZE_MAX);
    for (Elem y = 0; y < m; ++y) {
      size_t count = 0;
      for (size_t c : touching[y]) {
        for (Elem z : img[c]) {
          if (stamp[z] != y) {
            stamp[z] = y;
            ++count;
          }
        }
      }
      if (count != size_j[labels[y]]) {
        fail(Errc::not_transitive,
             "image of a congruence along " + f.dom()->name() + " -> "
                 + f.cod()->name() + " is not transitive at "
                 + std::to_string(y));
      }
    }
    return Congruence::trusted(f.cod(), labels);
  }

  Congruence preimage_congruence(Homomorphism const& f, Congruence const& theta) {
    std::vector<Elem> labels(f.dom()->size());
    for (Elem x = 0; x < labels.size(); ++x) {
      labels[x] = theta.block(f(x));
    }
    return Congruence::trusted(f.dom(), labels);
  }

  Congruence kernel_pair(Homomorphism const& f) {
    return Congruence::trusted(f.dom(), f.map());
  }

}  // namespace simal
