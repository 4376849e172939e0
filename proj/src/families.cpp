#include "diocurve/families.hpp"

#include "diocurve/errors.hpp"

namespace diocurve {

namespace {

Triple finish(const char* family, const Rat& param_desc_value,
              const Rat& a, const Rat& b, const Rat& c) {
  if (a.is_zero() || b.is_zero() || c.is_zero())
    throw DegenerateParameter(std::string(family) + ": element vanishes at " +
                              param_desc_value.str());
  if (a == b || a == c || b == c)
    throw DegenerateParameter(std::string(family) +
                              ": elements collide at " +
                              param_desc_value.str());
  return Triple::validate(a, b, c);
}

}  // namespace

Triple mixed_sign_family(const Rat& u, const Rat& t) {
  if (t == u)
    throw DegenerateParameter("mixed_sign_family: t = u");
  Rat ut1 = u * t + Rat(1);
  if (ut1.is_zero())
    throw DegenerateParameter("mixed_sign_family: ut = -1");
  if ((u * t).is_zero())
    throw DegenerateParameter("mixed_sign_family: ut = 0 (c vanishes)");
  Rat a = ut1 / (t - u);
  Rat b = (u - t) / ut1;  // = -1/a
  Rat c = Rat(4) * u * t / (ut1 * (t - u));
  return finish("mixed_sign_family", t, a, b, c);
}

Triple z2z6_family(const Rat& r) {
  Rat d = Rat(2) * r * r - Rat(1);
  if (r.is_zero())
    throw DegenerateParameter("z2z6_family: r = 0");
  if (d.is_zero())
    throw DegenerateParameter("z2z6_family: 2r^2 = 1");
  Rat a = Rat(-2) * r * (r - Rat(1)) * (r + Rat(1)) / d;
  Rat b = -d / (Rat(2) * r);
  Rat c = (Rat(2) * r - Rat(1)) * (Rat(2) * r + Rat(1)) / (Rat(2) * r * d);
  return finish("z2z6_family", r, a, b, c);
}

Triple z2z6_family_t(const Rat& t) {
  if (t.is_zero())
    throw DegenerateParameter("z2z6_family_t: t = 0");
  Rat d = t * t - Rat(2);  // never zero for rational t
  Rat a = -t * (t - Rat(2)) * (t + Rat(2)) / (Rat(2) * d);
  Rat b = Rat(2) * (t - Rat(1)) * (t + Rat(1)) / (d * t);
  Rat c = -d / (Rat(2) * t);
  return finish("z2z6_family_t", t, a, b, c);
}

Triple z2z8_family(const Rat& T) {
  if (T.is_zero())
    throw DegenerateParameter("z2z8_family: T = 0");
  Rat d = T * T - Rat(1);
  if (d.is_zero())
    throw DegenerateParameter("z2z8_family: T = ±1");
  Rat a = Rat(2) * T / d;
  Rat b = -d / (Rat(2) * T);
  Rat c = (Rat(6) * T * T - T.pow(4) - Rat(1)) / (Rat(2) * T * d);
  return finish("z2z8_family", T, a, b, c);
}

Triple make_family(FamilyTag tag, const std::array<Rat, 2>& params) {
  switch (tag) {
    case FamilyTag::MixedSign: return mixed_sign_family(params[0], params[1]);
    case FamilyTag::Z2Z6a: return z2z6_family(params[0]);
    case FamilyTag::Z2Z6t: return z2z6_family_t(params[0]);
    case FamilyTag::Z2Z8T: return z2z8_family(params[0]);
  }
  throw Error("unreachable family tag");
}

std::array<int, 3> sign_pattern(const Triple& tr) {
  return {tr.a().sign(), tr.b().sign(), tr.c().sign()};
}

bool all_same_sign(const Triple& tr) {
  auto s = sign_pattern(tr);
  return s[0] == s[1] && s[1] == s[2];
}

}  // namespace diocurve
