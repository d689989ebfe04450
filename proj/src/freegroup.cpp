#include "retword/freegroup.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>

#include "retword/error.hpp"

namespace retword {

  namespace {
    std::size_t slot_of(signed_letter x) {
      return x > 0 ? 2 * static_cast<std::size_t>(x - 1)
                   : 2 * static_cast<std::size_t>(-x - 1) + 1;
    }

    signed_letter letter_of_slot(std::size_t s) {
      auto a = static_cast<signed_letter>(s / 2) + 1;
      return s % 2 == 0 ? a : -a;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // group_word
  ////////////////////////////////////////////////////////////////////////

  group_word reduce(std::vector<signed_letter> const& raw) {
    return group_word(raw);
  }

  group_word::group_word(std::vector<signed_letter> raw) {
    _letters.reserve(raw.size());
    for (auto x : raw) {
      if (x == 0) {
        throw error(error_kind::parse_error, "0 is not a signed letter");
      }
      if (!_letters.empty() && _letters.back() == -x) {
        _letters.pop_back();
      } else {
        _letters.push_back(x);
      }
    }
  }

  group_word group_word::from_word(word const& w) {
    group_word g;
    g._letters.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      g._letters.push_back(static_cast<signed_letter>(letter_at(w, i)) + 1);
    }
    return group_word(std::move(g._letters));
  }

  group_word group_word::inverse() const {
    group_word g;
    g._letters.assign(_letters.rbegin(), _letters.rend());
    for (auto& x : g._letters) {
      x = -x;
    }
    return g;
  }

  group_word group_word::operator*(group_word const& rhs) const {
    std::vector<signed_letter> raw = _letters;
    raw.insert(raw.end(), rhs._letters.begin(), rhs._letters.end());
    return group_word(std::move(raw));
  }

  group_word group_word::conjugate(group_word const& p) const {
    return p.inverse() * (*this) * p;
  }

  bool group_word::is_positive() const {
    return std::all_of(
        _letters.begin(), _letters.end(), [](signed_letter x) { return x > 0; });
  }

  std::string group_word::render(alphabet const& a) const {
    std::string out;
    for (std::size_t i = 0; i < _letters.size(); ++i) {
      if (!a.single_char() && i != 0) {
        out.push_back(' ');
      }
      auto x = _letters[i];
      out += a.name(static_cast<letter_type>(std::abs(x) - 1));
      if (x < 0) {
        out.push_back('\'');
      }
    }
    return out;
  }

  group_word parse_group_word(std::string_view text, alphabet const& a) {
    std::vector<signed_letter> raw;
    std::size_t                i = 0;
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      if (a.single_char()) {
        j = i + 1;
      } else {
        while (j < text.size() && text[j] != '\''
               && !std::isspace(static_cast<unsigned char>(text[j]))) {
          ++j;
        }
      }
      auto letter = static_cast<signed_letter>(a.index(text.substr(i, j - i))) + 1;
      if (j < text.size() && text[j] == '\'') {
        letter = -letter;
        ++j;
      }
      raw.push_back(letter);
      i = j;
    }
    return group_word(std::move(raw));
  }

  ////////////////////////////////////////////////////////////////////////
  // free_morphism
  ////////////////////////////////////////////////////////////////////////

  free_morphism::free_morphism(alphabet                domain,
                               alphabet                codomain,
                               std::vector<group_word> images)
      : _domain(std::move(domain)),
        _codomain(std::move(codomain)),
        _images(std::move(images)) {
    if (_images.size() != _domain.size()) {
      throw error(error_kind::incompatible,
                  "a morphism needs one image per domain letter");
    }
  }

  free_morphism::free_morphism(substitution const& s)
      : _domain(s.domain()), _codomain(s.codomain()) {
    for (auto const& im : s.images()) {
      _images.push_back(group_word::from_word(im));
    }
  }

  free_morphism free_morphism::identity(alphabet const& a) {
    return free_morphism(substitution::identity(a));
  }

  group_word free_morphism::operator()(group_word const& g) const {
    std::vector<signed_letter> raw;
    for (auto x : g.letters()) {
      auto a = static_cast<std::size_t>(std::abs(x) - 1);
      if (a >= _images.size()) {
        throw error(error_kind::letter_outside_domain,
                    "letter outside the domain of the morphism");
      }
      if (x > 0) {
        auto const& im = _images[a].letters();
        raw.insert(raw.end(), im.begin(), im.end());
      } else {
        auto im = _images[a].inverse();
        raw.insert(raw.end(), im.letters().begin(), im.letters().end());
      }
    }
    return group_word(std::move(raw));
  }

  ////////////////////////////////////////////////////////////////////////
  // folding
  ////////////////////////////////////////////////////////////////////////

  class folder {
   public:
    explicit folder(std::size_t d) : _d(d) {
      add_vertex();
    }

    int add_vertex() {
      _parent.push_back(static_cast<int>(_parent.size()));
      _table.resize(_table.size() + 2 * _d, -1);
      return _parent.back();
    }

    int find(int v) {
      while (_parent[v] != v) {
        _parent[v] = _parent[_parent[v]];
        v          = _parent[v];
      }
      return v;
    }

    void add_edge(int u, std::size_t slot, int v) {
      _pending.emplace_back(u, slot, v);
      process();
    }

    void add_loop(int base, group_word const& g) {
      auto const& xs = g.letters();
      if (xs.empty()) {
        return;
      }
      int         cur = find(base);
      std::size_t i   = 0;
      // Follow edges already present, then add a fresh path.
      while (i + 1 < xs.size()) {
        int t = at(cur, slot_of(xs[i]));
        if (t == -1) {
          break;
        }
        cur = find(t);
        ++i;
      }
      for (; i + 1 < xs.size(); ++i) {
        int nv = add_vertex();
        add_edge(cur, slot_of(xs[i]), nv);
        cur = find(nv);
      }
      add_edge(cur, slot_of(xs.back()), find(base));
    }

    core_graph finish(int base);

   private:
    int& at(int v, std::size_t s) {
      return _table[static_cast<std::size_t>(v) * 2 * _d + s];
    }

    void merge(int x, int y) {
      x = find(x);
      y = find(y);
      if (x == y) {
        return;
      }
      if (y < x) {
        std::swap(x, y);
      }
      _parent[y] = x;
      for (std::size_t s = 0; s < 2 * _d; ++s) {
        int t = at(y, s);
        if (t != -1) {
          at(y, s) = -1;
          _pending.emplace_back(x, s, t);
        }
      }
    }

    void process() {
      while (!_pending.empty()) {
        auto [u, s, v] = _pending.back();
        _pending.pop_back();
        u     = find(u);
        v     = find(v);
        int a = at(u, s);
        int b = at(v, s ^ 1);
        a     = a == -1 ? -1 : find(a);
        b     = b == -1 ? -1 : find(b);
        if (a != -1 && a != v) {
          merge(a, v);
          _pending.emplace_back(u, s, v);
          continue;
        }
        if (b != -1 && b != u) {
          merge(b, u);
          _pending.emplace_back(u, s, v);
          continue;
        }
        at(u, s)     = v;
        at(v, s ^ 1) = u;
      }
    }

    std::size_t                                    _d;
    std::vector<int>                               _parent;
    std::vector<int>                               _table;
    std::vector<std::tuple<int, std::size_t, int>> _pending;
  };

  core_graph folder::finish(int base) {
    base                = find(base);
    std::size_t const n = _parent.size();
    std::vector<int>  degree(n, 0);
    std::vector<bool> alive(n, false);
    for (std::size_t v = 0; v < n; ++v) {
      if (find(static_cast<int>(v)) != static_cast<int>(v)) {
        continue;
      }
      alive[v] = true;
      for (std::size_t s = 0; s < 2 * _d; ++s) {
        int& t = at(static_cast<int>(v), s);
        if (t != -1) {
          t = find(t);
          ++degree[v];
        }
      }
    }
    std::deque<int> queue;
    for (std::size_t v = 0; v < n; ++v) {
      if (alive[v] && static_cast<int>(v) != base && degree[v] <= 1) {
        queue.push_back(static_cast<int>(v));
      }
    }
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      if (!alive[v]) {
        continue;
      }
      alive[v] = false;
      for (std::size_t s = 0; s < 2 * _d; ++s) {
        int t = at(v, s);
        if (t == -1) {
          continue;
        }
        at(v, s) = -1;
        if (at(t, s ^ 1) == v) {
          at(t, s ^ 1) = -1;
          --degree[t];
        }
        if (t != base && alive[t] && degree[t] <= 1) {
          queue.push_back(t);
        }
      }
    }
    std::vector<int> relabel(n, -1);
    std::vector<int> order{base};
    relabel[base] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t s = 0; s < 2 * _d; ++s) {
        int t = at(order[i], s);
        if (t != -1 && relabel[t] == -1) {
          relabel[t] = static_cast<int>(order.size());
          order.push_back(t);
        }
      }
    }
    core_graph g;
    g._d = _d;
    g._n = order.size();
    g._table.assign(g._n * 2 * _d, -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t s = 0; s < 2 * _d; ++s) {
        int t = at(order[i], s);
        if (t != -1) {
          g._table[i * 2 * _d + s] = relabel[t];
        }
      }
    }
    return g;
  }

  ////////////////////////////////////////////////////////////////////////
  // core_graph
  ////////////////////////////////////////////////////////////////////////

  core_graph::core_graph(std::size_t rank, std::vector<group_word> const& gens)
      : _d(rank), _n(1), _table(2 * rank, -1) {
    folder f(rank);
    for (auto const& g : gens) {
      for (auto x : g.letters()) {
        if (static_cast<std::size_t>(std::abs(x)) > rank) {
          throw error(error_kind::letter_outside_domain,
                      "generator letter outside the free group");
        }
      }
      f.add_loop(0, g);
    }
    *this = f.finish(0);
  }

  core_graph core_graph::from_graph(
      std::size_t                                                           rank,
      std::size_t                                                           vertices,
      std::vector<std::tuple<std::size_t, letter_type, std::size_t>> const& edges,
      std::size_t                                                           base) {
    folder f(rank);
    for (std::size_t v = 1; v < vertices; ++v) {
      f.add_vertex();
    }
    for (auto const& [u, a, v] : edges) {
      if (a >= rank) {
        throw error(error_kind::letter_outside_domain,
                    "edge label outside the free group");
      }
      f.add_edge(static_cast<int>(u), 2 * a, static_cast<int>(v));
    }
    return f.finish(static_cast<int>(base));
  }

  core_graph core_graph::full(std::size_t rank) {
    std::vector<group_word> gens;
    for (std::size_t a = 0; a < rank; ++a) {
      gens.emplace_back(std::vector<signed_letter>{static_cast<int>(a) + 1});
    }
    return core_graph(rank, gens);
  }

  std::size_t core_graph::edge_count() const {
    return static_cast<std::size_t>(
               std::count_if(_table.begin(), _table.end(),
                             [](int t) { return t != -1; }))
           / 2;
  }

  std::size_t core_graph::rank() const {
    return edge_count() + 1 - _n;
  }

  bool core_graph::contains(group_word const& g) const {
    std::size_t cur = 0;
    for (auto x : g.letters()) {
      if (static_cast<std::size_t>(std::abs(x)) > _d) {
        return false;
      }
      int t = target(cur, slot_of(x));
      if (t == -1) {
        return false;
      }
      cur = static_cast<std::size_t>(t);
    }
    return cur == 0;
  }

  std::vector<group_word> core_graph::generators() const {
    std::vector<int>                        parent(_n, -1);
    std::vector<std::size_t>                pslot(_n, 0);
    std::vector<std::vector<signed_letter>> path(_n);
    std::vector<bool>                       seen(_n, false);
    std::vector<std::size_t>                order{0};
    seen[0] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
      auto v = order[i];
      for (std::size_t s = 0; s < 2 * _d; ++s) {
        int t = target(v, s);
        if (t != -1 && !seen[t]) {
          seen[t]   = true;
          parent[t] = static_cast<int>(v);
          pslot[t]  = s;
          path[t]   = path[v];
          path[t].push_back(letter_of_slot(s));
          order.push_back(static_cast<std::size_t>(t));
        }
      }
    }
    std::vector<group_word> gens;
    for (std::size_t v = 0; v < _n; ++v) {
      for (std::size_t a = 0; a < _d; ++a) {
        int t = target(v, 2 * a);
        if (t == -1) {
          continue;
        }
        auto tu = static_cast<std::size_t>(t);
        bool tree
            = (tu != v)
              && ((parent[tu] == static_cast<int>(v) && pslot[tu] == 2 * a)
                  || (parent[v] == t && pslot[v] == 2 * a + 1));
        if (tree) {
          continue;
        }
        std::vector<signed_letter> raw = path[v];
        raw.push_back(static_cast<signed_letter>(a) + 1);
        auto back = group_word(path[tu]).inverse();
        raw.insert(raw.end(), back.letters().begin(), back.letters().end());
        gens.emplace_back(std::move(raw));
      }
    }
    return gens;
  }

  bool core_graph::is_finite_index() const {
    return std::all_of(
        _table.begin(), _table.end(), [](int t) { return t != -1; });
  }

  bool core_graph::is_full() const {
    return _n == 1 && is_finite_index();
  }

  std::vector<std::tuple<std::size_t, letter_type, std::size_t>>
  core_graph::edges() const {
    std::vector<std::tuple<std::size_t, letter_type, std::size_t>> out;
    for (std::size_t v = 0; v < _n; ++v) {
      for (std::size_t a = 0; a < _d; ++a) {
        int t = target(v, 2 * a);
        if (t != -1) {
          out.emplace_back(v, static_cast<letter_type>(a),
                           static_cast<std::size_t>(t));
        }
      }
    }
    return out;
  }

  bool subgroup_leq(core_graph const& h1, core_graph const& h2) {
    auto gens = h1.generators();
    return std::all_of(gens.begin(), gens.end(), [&h2](group_word const& g) {
      return h2.contains(g);
    });
  }

  bool subgroup_equal(core_graph const& h1, core_graph const& h2) {
    return h1 == h2;
  }

  bool is_proper(core_graph const& h1, core_graph const& h2) {
    return subgroup_leq(h1, h2) && !(h1 == h2);
  }

  namespace {
    struct cyclic_core {
      std::size_t       d = 0;
      std::vector<int>  table;
      std::vector<bool> alive;
      std::size_t       vertices = 0;
      std::size_t       edges    = 0;

      int at(std::size_t v, std::size_t s) const {
        return table[v * 2 * d + s];
      }
    };

    cyclic_core make_cyclic_core(core_graph const& g) {
      cyclic_core c;
      c.d                 = g.alphabet_size();
      c.table             = g.table();
      std::size_t const n = g.vertex_count();
      c.alive.assign(n, true);
      std::vector<int> degree(n, 0);
      for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t s = 0; s < 2 * c.d; ++s) {
          degree[v] += c.at(v, s) != -1;
        }
      }
      std::deque<std::size_t> queue;
      for (std::size_t v = 0; v < n; ++v) {
        if (degree[v] <= 1) {
          queue.push_back(v);
        }
      }
      while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        if (!c.alive[v]) {
          continue;
        }
        c.alive[v] = false;
        for (std::size_t s = 0; s < 2 * c.d; ++s) {
          int t = c.table[v * 2 * c.d + s];
          if (t == -1) {
            continue;
          }
          c.table[v * 2 * c.d + s]                                  = -1;
          c.table[static_cast<std::size_t>(t) * 2 * c.d + (s ^ 1)] = -1;
          if (--degree[t] <= 1 && c.alive[t]) {
            queue.push_back(static_cast<std::size_t>(t));
          }
        }
      }
      for (std::size_t v = 0; v < n; ++v) {
        if (c.alive[v]) {
          ++c.vertices;
          for (std::size_t a = 0; a < c.d; ++a) {
            c.edges += c.at(v, 2 * a) != -1;
          }
        }
      }
      return c;
    }

    bool isomorphic_from(cyclic_core const& x,
                         std::size_t        v0,
                         cyclic_core const& y,
                         std::size_t        w0) {
      std::vector<int> map(x.alive.size(), -1);
      std::vector<int> back(y.alive.size(), -1);
      std::vector<std::size_t> stack{v0};
      map[v0]  = static_cast<int>(w0);
      back[w0] = static_cast<int>(v0);
      while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        auto w = static_cast<std::size_t>(map[v]);
        for (std::size_t s = 0; s < 2 * x.d; ++s) {
          int tv = x.at(v, s);
          int tw = y.at(w, s);
          if ((tv == -1) != (tw == -1)) {
            return false;
          }
          if (tv == -1) {
            continue;
          }
          if (map[tv] == -1 && back[tw] == -1) {
            map[tv]  = tw;
            back[tw] = tv;
            stack.push_back(static_cast<std::size_t>(tv));
          } else if (map[tv] != tw || back[tw] != tv) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  bool is_conjugate(core_graph const& h1, core_graph const& h2) {
    if (h1.alphabet_size() != h2.alphabet_size()) {
      return false;
    }
    auto c1 = make_cyclic_core(h1);
    auto c2 = make_cyclic_core(h2);
    if (c1.vertices != c2.vertices || c1.edges != c2.edges) {
      return false;
    }
    if (c1.vertices == 0) {
      return true;
    }
    auto v0 = static_cast<std::size_t>(
        std::find(c1.alive.begin(), c1.alive.end(), true) - c1.alive.begin());
    for (std::size_t w = 0; w < c2.alive.size(); ++w) {
      if (c2.alive[w] && isomorphic_from(c1, v0, c2, w)) {
        return true;
      }
    }
    return false;
  }

  core_graph morphism_image(free_morphism const&           phi,
                            std::vector<group_word> const& gens) {
    std::vector<group_word> images;
    images.reserve(gens.size());
    for (auto const& g : gens) {
      images.push_back(phi(g));
    }
    return core_graph(phi.codomain().size(), images);
  }

  core_graph morphism_image(free_morphism const& phi, core_graph const& h) {
    return morphism_image(phi, h.generators());
  }

  bool injective_on(free_morphism const& phi, core_graph const& h) {
    return morphism_image(phi, h).rank() == h.rank();
  }

  std::vector<long long> abelianize(group_word const& g, std::size_t d) {
    std::vector<long long> v(d, 0);
    for (auto x : g.letters()) {
      auto a = static_cast<std::size_t>(std::abs(x) - 1);
      if (a >= d) {
        throw error(error_kind::letter_outside_domain,
                    "letter outside the abelianization alphabet");
      }
      v[a] += x > 0 ? 1 : -1;
    }
    return v;
  }

  std::vector<long long> abelianize_mod(group_word const& g,
                                        std::size_t       d,
                                        long long         k) {
    if (k < 1) {
      throw error(error_kind::incompatible, "the modulus must be positive");
    }
    auto v = abelianize(g, d);
    for (auto& x : v) {
      x = ((x % k) + k) % k;
    }
    return v;
  }

  ////////////////////////////////////////////////////////////////////////
  // abelian_lattice
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using matrix = std::vector<std::vector<big_int>>;

    big_int floor_div(big_int const& a, big_int const& b) {
      big_int q = a / b;
      if ((a % b != 0) && ((a < 0) != (b < 0))) {
        q -= 1;
      }
      return q;
    }

    matrix hermite(matrix rows, std::size_t dim) {
      std::size_t r = 0;
      for (std::size_t c = 0; c < dim && r < rows.size(); ++c) {
        while (true) {
          std::size_t best = rows.size();
          for (std::size_t i = r; i < rows.size(); ++i) {
            if (rows[i][c] != 0
                && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c]))) {
              best = i;
            }
          }
          if (best == rows.size()) {
            break;
          }
          std::swap(rows[r], rows[best]);
          bool done = true;
          for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) {
              continue;
            }
            big_int q = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < dim; ++j) {
              rows[i][j] -= q * rows[r][j];
            }
            if (rows[i][c] != 0) {
              done = false;
            }
          }
          if (done) {
            break;
          }
        }
        if (r >= rows.size() || rows[r][c] == 0) {
          continue;
        }
        if (rows[r][c] < 0) {
          for (auto& x : rows[r]) {
            x = -x;
          }
        }
        for (std::size_t i = 0; i < r; ++i) {
          big_int q = floor_div(rows[i][c], rows[r][c]);
          if (q != 0) {
            for (std::size_t j = c; j < dim; ++j) {
              rows[i][j] -= q * rows[r][j];
            }
          }
        }
        ++r;
      }
      rows.resize(r);
      return rows;
    }

    std::size_t pivot_column(std::vector<big_int> const& row) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] != 0) {
          return j;
        }
      }
      return row.size();
    }
  }  // namespace

  abelian_lattice::abelian_lattice(std::size_t dim, matrix vectors) : _dim(dim) {
    for (auto const& v : vectors) {
      if (v.size() != dim) {
        throw error(error_kind::incompatible,
                    "lattice vectors must have the lattice dimension");
      }
    }
    _hnf = hermite(std::move(vectors), dim);
  }

  abelian_lattice abelian_lattice::from_words(std::vector<group_word> const& words,
                                              std::size_t                    d) {
    matrix rows;
    for (auto const& g : words) {
      auto                 v = abelianize(g, d);
      std::vector<big_int> row(v.begin(), v.end());
      rows.push_back(std::move(row));
    }
    return abelian_lattice(d, std::move(rows));
  }

  std::vector<big_int> abelian_lattice::elementary_divisors() const {
    matrix            a    = _hnf;
    std::size_t const rows = a.size();
    std::size_t const cols = _dim;
    std::vector<big_int> out;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
      while (true) {
        std::size_t bi = rows, bj = cols;
        for (std::size_t i = t; i < rows; ++i) {
          for (std::size_t j = t; j < cols; ++j) {
            if (a[i][j] != 0
                && (bi == rows || abs(a[i][j]) < abs(a[bi][bj]))) {
              bi = i;
              bj = j;
            }
          }
        }
        if (bi == rows) {
          return out;
        }
        std::swap(a[t], a[bi]);
        for (auto& row : a) {
          std::swap(row[t], row[bj]);
        }
        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
          big_int q = a[i][t] / a[t][t];
          for (std::size_t j = t; j < cols; ++j) {
            a[i][j] -= q * a[t][j];
          }
          clean = clean && a[i][t] == 0;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          big_int q = a[t][j] / a[t][t];
          for (std::size_t i = t; i < rows; ++i) {
            a[i][j] -= q * a[i][t];
          }
          clean = clean && a[t][j] == 0;
        }
        if (!clean) {
          continue;
        }
        bool divides = true;
        for (std::size_t i = t + 1; i < rows && divides; ++i) {
          for (std::size_t j = t + 1; j < cols; ++j) {
            if (a[i][j] % a[t][t] != 0) {
              for (std::size_t k = t; k < cols; ++k) {
                a[t][k] += a[i][k];
              }
              divides = false;
              break;
            }
          }
        }
        if (divides) {
          break;
        }
      }
      out.push_back(abs(a[t][t]));
    }
    return out;
  }

  bool abelian_lattice::is_full() const {
    if (_hnf.size() != _dim) {
      return false;
    }
    for (std::size_t i = 0; i < _dim; ++i) {
      if (_hnf[i][i] != 1) {
        return false;
      }
    }
    return true;
  }

  big_int abelian_lattice::index() const {
    if (_hnf.size() != _dim) {
      return 0;
    }
    big_int p = 1;
    for (std::size_t i = 0; i < _dim; ++i) {
      p *= _hnf[i][i];
    }
    return p;
  }

  bool abelian_lattice::contains(std::vector<big_int> const& v) const {
    if (v.size() != _dim) {
      return false;
    }
    auto x = v;
    for (auto const& row : _hnf) {
      auto c = pivot_column(row);
      if (x[c] % row[c] != 0) {
        return false;
      }
      big_int q = x[c] / row[c];
      for (std::size_t j = c; j < _dim; ++j) {
        x[j] -= q * row[j];
      }
    }
    return std::all_of(x.begin(), x.end(), [](big_int const& y) { return y == 0; });
  }

  abelian_lattice lattice_image(matrix const& m, abelian_lattice const& l) {
    std::size_t const dim = l.dimension();
    matrix            rows;
    for (auto const& b : l.basis()) {
      std::vector<big_int> w(m.size(), 0);
      for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
          w[i] += m[i][j] * b[j];
        }
      }
      rows.push_back(std::move(w));
    }
    return abelian_lattice(m.size(), std::move(rows));
  }

  big_int determinant(matrix m) {
    std::size_t const n = m.size();
    if (n == 0) {
      return 1;
    }
    big_int sign = 1;
    big_int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m[k][k] == 0) {
        std::size_t swap = k + 1;
        while (swap < n && m[swap][k] == 0) {
          ++swap;
        }
        if (swap == n) {
          return 0;
        }
        std::swap(m[k], m[swap]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        }
      }
      prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
  }

}  // namespace retword
