#include "twk/monoid.hpp"

namespace twk {

std::vector<std::string> validate_monoid(const Monoid& m) {
  std::vector<std::string> out;
  long n = m.size();
  if (m.unit < 0 || m.unit >= n) {
    out.push_back("unit index out of range");
    return out;
  }
  if (static_cast<long>(m.mul.size()) != n) {
    out.push_back("multiplication table has wrong height");
    return out;
  }
  for (long a = 0; a < n; ++a) {
    if (static_cast<long>(m.mul[static_cast<size_t>(a)].size()) != n) {
      out.push_back("multiplication row " + m.elems[static_cast<size_t>(a)] + " has wrong width");
      return out;
    }
    for (long b = 0; b < n; ++b)
      if (m.times(a, b) < 0 || m.times(a, b) >= n)
        out.push_back("product out of range at (" + m.elems[static_cast<size_t>(a)] + ", " +
                      m.elems[static_cast<size_t>(b)] + ")");
  }
  for (long a = 0; a < n; ++a) {
    if (m.times(m.unit, a) != a)
      out.push_back("left unit law fails at " + m.elems[static_cast<size_t>(a)]);
    if (m.times(a, m.unit) != a)
      out.push_back("right unit law fails at " + m.elems[static_cast<size_t>(a)]);
  }
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      for (long c = 0; c < n; ++c)
        if (m.times(m.times(a, b), c) != m.times(a, m.times(b, c)))
          out.push_back("associativity fails at (" + m.elems[static_cast<size_t>(a)] + ", " +
                        m.elems[static_cast<size_t>(b)] + ", " + m.elems[static_cast<size_t>(c)] + ")");
  return out;
}

bool validate_monhom(const MonHom& f) {
  long n = f.src.size();
  if (static_cast<long>(f.map.size()) != n) return false;
  for (long a : f.map)
    if (a < 0 || a >= f.dst.size()) return false;
  if (f.at(f.src.unit) != f.dst.unit) return false;
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      if (f.at(f.src.times(a, b)) != f.dst.times(f.at(a), f.at(b))) return false;
  return true;
}

MonHom id_monhom(const Monoid& m) {
  MonHom f{m, m, {}};
  for (long a = 0; a < m.size(); ++a) f.map.push_back(a);
  return f;
}

MonHom compose_monhom(const MonHom& g, const MonHom& f) {
  if (!(g.src == f.dst)) throw math_error("compose_monhom: middle monoids differ");
  MonHom h{f.src, g.dst, {}};
  for (long a = 0; a < f.src.size(); ++a) h.map.push_back(g.at(f.at(a)));
  return h;
}

bool is_surjective_monhom(const MonHom& f) {
  std::vector<bool> hit(static_cast<size_t>(f.dst.size()), false);
  for (long a : f.map) hit[static_cast<size_t>(a)] = true;
  for (bool b : hit)
    if (!b) return false;
  return true;
}

Monoid capped_nat(long k) {
  if (k < 0) throw math_error("capped_nat: negative cap");
  Monoid m;
  for (long i = 0; i <= k; ++i) m.elems.push_back(std::to_string(i));
  m.unit = 0;
  m.mul.assign(static_cast<size_t>(k + 1), std::vector<long>(static_cast<size_t>(k + 1)));
  for (long a = 0; a <= k; ++a)
    for (long b = 0; b <= k; ++b) m.mul[static_cast<size_t>(a)][static_cast<size_t>(b)] = std::min(a + b, k);
  return m;
}

Monoid bool_monoid() { return capped_nat(1); }

Monoid cyclic_group(long n) {
  if (n < 1) throw math_error("cyclic_group: order must be positive");
  Monoid m;
  for (long i = 0; i < n; ++i) m.elems.push_back(std::to_string(i));
  m.unit = 0;
  m.mul.assign(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n)));
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) m.mul[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % n;
  return m;
}

Monoid trivial_monoid() { return capped_nat(0); }

MonHom sign_hom(long k) {
  MonHom f{capped_nat(k), bool_monoid(), {}};
  for (long a = 0; a <= k; ++a) f.map.push_back(a == 0 ? 0 : 1);
  return f;
}

MonHom cyclic_quotient(long n, long m) {
  if (m < 1 || n % m != 0) throw math_error("cyclic_quotient: target order must divide source");
  MonHom f{cyclic_group(n), cyclic_group(m), {}};
  for (long a = 0; a < n; ++a) f.map.push_back(a % m);
  return f;
}

MonHom unit_hom(const Monoid& dst) {
  return MonHom{trivial_monoid(), dst, {dst.unit}};
}

}  // namespace twk
