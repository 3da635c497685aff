#include "hcmcg/cocycles.hpp"

#include <cstdlib>
#include <map>

#include "hcmcg/error.hpp"
#include "hcmcg/exact_linear.hpp"
#include "hcmcg/symplectic.hpp"

namespace hcmcg {

namespace {

IntMatrix commutator(const IntMatrix& a, const IntMatrix& b) {
  return a * b * symplectic_inverse(a) * symplectic_inverse(b);
}

// Letters of a1 b1 a1^-1 b1^-1 ... as affine elements.
std::vector<AffineElement> relator_letters(const AffineSurfaceClass& cls) {
  std::vector<AffineElement> out;
  for (std::size_t i = 0; i < cls.base.h(); ++i) {
    AffineElement a{cls.translations[i].first, cls.base.pairs[i].first};
    AffineElement b{cls.translations[i].second, cls.base.pairs[i].second};
    out.push_back(a);
    out.push_back(b);
    out.push_back(a.inverse());
    out.push_back(b.inverse());
  }
  return out;
}

}  // namespace

void SurfaceClass::validate() const {
  if (g < 1) throw InvalidArgument("surface class needs symplectic genus >= 1");
  if (pairs.empty()) throw InvalidArgument("surface class needs surface genus >= 1");
  IntMatrix prod = IntMatrix::identity(2 * g);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (const IntMatrix* m : {&pairs[i].first, &pairs[i].second}) {
      if (m->rows() != 2 * g || m->cols() != 2 * g)
        throw DimensionMismatch("holonomy " + std::to_string(i + 1) + " is not " + std::to_string(2 * g) + "x" +
                                std::to_string(2 * g));
      if (!is_member(GroupFamily::Sp, *m, g))
        throw InvalidArgument("holonomy " + std::to_string(i + 1) + " is not symplectic");
    }
    prod = prod * commutator(pairs[i].first, pairs[i].second);
  }
  if (prod != IntMatrix::identity(2 * g)) throw RelatorViolation("product of commutators is not the identity");
}

void AffineSurfaceClass::validate() const {
  base.validate();
  if (translations.size() != base.h()) throw DimensionMismatch("one translation pair per holonomy pair required");
  for (const auto& [v, w] : translations)
    if (v.size() != 2 * base.g || w.size() != 2 * base.g)
      throw DimensionMismatch("translation vectors must have length 2g");
  IntMatrix c = translation_constraints(base);
  IntVector stacked;
  for (const auto& [v, w] : translations) {
    stacked.insert(stacked.end(), v.begin(), v.end());
    stacked.insert(stacked.end(), w.begin(), w.end());
  }
  if (!is_zero(c * stacked)) throw RelatorViolation("translations do not define a crossed homomorphism");
}

AffineSurfaceClass AffineSurfaceClass::untranslated(const SurfaceClass& c) {
  AffineSurfaceClass out;
  out.base = c;
  IntVector z(2 * c.g, Int(0));
  out.translations.assign(c.h(), {z, z});
  return out;
}

AffineElement AffineElement::identity(std::size_t dim) {
  return {IntVector(dim, Int(0)), IntMatrix::identity(dim)};
}

AffineElement AffineElement::operator*(const AffineElement& o) const { return {add(v, a * o.v), a * o.a}; }

AffineElement AffineElement::inverse() const {
  IntMatrix ai = symplectic_inverse(a);
  return {scaled(ai * v, -1), ai};
}

bool BarTwoCycle::boundary_vanishes() const {
  std::map<AffineElement, Int> chain;
  for (const auto& t : terms) {
    chain[t.b] += t.coeff;
    chain[t.a * t.b] -= t.coeff;
    chain[t.a] += t.coeff;
  }
  for (const auto& [elem, c] : chain)
    if (c != 0) return false;
  return true;
}

int meyer_tau(const IntMatrix& a, const IntMatrix& b) {
  if (!a.is_square() || a.rows() % 2 != 0 || b.rows() != a.rows() || !b.is_square())
    throw DimensionMismatch("meyer_tau: need two 2g x 2g matrices");
  const std::size_t g = a.rows() / 2, d = 2 * g;
  if (!is_member(GroupFamily::Sp, a, g) || !is_member(GroupFamily::Sp, b, g))
    throw InvalidArgument("meyer_tau: input is not symplectic");
  const IntMatrix id = IntMatrix::identity(d);
  const IntMatrix j = wall_lambda(g, -1);
  IntMatrix constraint = (symplectic_inverse(a) - id).hconcat(b - id);
  IntMatrix k = kernel_basis(constraint);
  if (k.cols() == 0) return 0;
  IntMatrix jb = j * (id - b);
  IntMatrix w = IntMatrix(d, d).hconcat(jb).vconcat(IntMatrix(d, d).hconcat(jb));
  IntMatrix gram = k.transpose() * w * k;
  if (gram != gram.transpose()) throw Error("meyer_tau: bilinear form is not symmetric on V");
  return exact_signature(gram + gram.transpose());
}

BarTwoCycle surface_two_cycle(const AffineSurfaceClass& cls) {
  cls.validate();
  const std::size_t dim = 2 * cls.base.g;
  std::vector<AffineElement> letters = relator_letters(cls);
  BarTwoCycle out;
  AffineElement prefix = letters.front();
  for (std::size_t k = 1; k < letters.size(); ++k) {
    out.terms.push_back({prefix, letters[k], Int(1)});
    prefix = prefix * letters[k];
  }
  for (std::size_t k = 0; k < letters.size(); k += 4) {
    out.terms.push_back({letters[k], letters[k + 2], Int(-1)});
    out.terms.push_back({letters[k + 1], letters[k + 3], Int(-1)});
  }
  const AffineElement e = AffineElement::identity(dim);
  for (std::size_t i = 0; i + 1 < 2 * cls.base.h(); ++i) out.terms.push_back({e, e, Int(-1)});
  if (!out.boundary_vanishes()) throw Error("surface_two_cycle: boundary does not vanish");
  return out;
}

BarTwoCycle surface_two_cycle(const SurfaceClass& cls) {
  return surface_two_cycle(AffineSurfaceClass::untranslated(cls));
}

Int signature_of_class(const SurfaceClass& cls) {
  Int s = 0;
  for (const auto& t : surface_two_cycle(cls).terms) s += t.coeff * meyer_tau(t.a.a, t.b.a);
  return s;
}

Int chi2_of_class(const AffineSurfaceClass& cls) {
  const IntMatrix j = wall_lambda(cls.base.g, -1);
  Int s = 0;
  for (const auto& t : surface_two_cycle(cls).terms) s += t.coeff * dot(t.a.v, j * (t.a.a * t.b.v));
  return s;
}

DividedClass parse_divided_class(const std::string& name) {
  if (name == "sgn/8") return DividedClass::SgnOver8;
  if (name == "chi2/2") return DividedClass::Chi2Over2;
  if (name == "(chi2-sgn)/8") return DividedClass::Chi2MinusSgnOver8;
  throw InvalidArgument("unknown divided class '" + name + "' (expected sgn/8, chi2/2 or (chi2-sgn)/8)");
}

std::string divided_class_name(DividedClass which) {
  switch (which) {
    case DividedClass::SgnOver8: return "sgn/8";
    case DividedClass::Chi2Over2: return "chi2/2";
    case DividedClass::Chi2MinusSgnOver8: return "(chi2-sgn)/8";
  }
  return "?";
}

namespace {

Int checked_quotient(const Int& value, long divisor, const std::string& what) {
  if (!mpz_divisible_ui_p(value.get_mpz_t(), divisor))
    throw DivisibilityError(what + " = " + value.get_str() + " is not divisible by " + std::to_string(divisor));
  return value / divisor;
}

void require_theta_group(const SurfaceClass& cls) {
  for (const auto& [a, b] : cls.pairs)
    if (!is_member(GroupFamily::SpQ, a, cls.g) || !is_member(GroupFamily::SpQ, b, cls.g))
      throw InvalidArgument("sgn/8 needs every holonomy in the theta group");
}

}  // namespace

Int divided_eval(DividedClass which, const SurfaceClass& cls) {
  if (which != DividedClass::SgnOver8)
    throw InvalidArgument(divided_class_name(which) + " needs translation data");
  cls.validate();
  require_theta_group(cls);
  return checked_quotient(signature_of_class(cls), 8, "signature");
}

Int divided_eval(DividedClass which, const AffineSurfaceClass& cls) {
  switch (which) {
    case DividedClass::SgnOver8: return divided_eval(which, cls.base);
    case DividedClass::Chi2Over2: return checked_quotient(chi2_of_class(cls), 2, "chi2");
    case DividedClass::Chi2MinusSgnOver8:
      return checked_quotient(chi2_of_class(cls) - signature_of_class(cls.base), 8, "chi2 - sgn");
  }
  throw InvalidArgument("unknown divided class");
}

SurfaceClass commutator_swap_class(std::size_t g, const IntMatrix& x, const IntMatrix& y) {
  SurfaceClass c{g, {{x, y}, {y, x}}};
  c.validate();
  return c;
}

SurfaceClass shifted_swap_class(std::size_t g, const IntMatrix& x, const IntMatrix& y, long k) {
  IntMatrix xk = k >= 0 ? power(x, k) : power(symplectic_inverse(x), -k);
  SurfaceClass c{g, {{x, y}, {y * xk, x}}};
  c.validate();
  return c;
}

SurfaceClass torus_class(std::size_t g, const IntMatrix& a, const IntMatrix& b) {
  SurfaceClass c{g, {{a, b}}};
  c.validate();
  return c;
}

SurfaceClass commutator_power_class(std::size_t g, const IntMatrix& x, const IntMatrix& y, std::size_t k) {
  if (k < 1) throw InvalidArgument("commutator_power_class: power must be >= 1");
  SurfaceClass c{g, std::vector<MatrixPair>(k, {x, y})};
  c.validate();
  return c;
}

SurfaceClass conjugate_class(const SurfaceClass& cls, const IntMatrix& c) {
  IntMatrix ci = symplectic_inverse(c);
  SurfaceClass out{cls.g, {}};
  for (const auto& [a, b] : cls.pairs) out.pairs.push_back({c * a * ci, c * b * ci});
  return out;
}

SurfaceClass concatenate(const SurfaceClass& a, const SurfaceClass& b) {
  if (a.g != b.g) throw DimensionMismatch("concatenate: symplectic genera differ");
  SurfaceClass out = a;
  out.pairs.insert(out.pairs.end(), b.pairs.begin(), b.pairs.end());
  return out;
}

AffineSurfaceClass concatenate(const AffineSurfaceClass& a, const AffineSurfaceClass& b) {
  AffineSurfaceClass out;
  out.base = concatenate(a.base, b.base);
  out.translations = a.translations;
  out.translations.insert(out.translations.end(), b.translations.begin(), b.translations.end());
  return out;
}

AffineSurfaceClass scale_translations(const AffineSurfaceClass& cls, const Int& t) {
  AffineSurfaceClass out = cls;
  for (auto& [v, w] : out.translations) {
    v = scaled(v, t);
    w = scaled(w, t);
  }
  return out;
}

AffineSurfaceClass torus_generator_class(std::size_t g) {
  AffineSurfaceClass out;
  out.base = {g, {{IntMatrix::identity(2 * g), IntMatrix::identity(2 * g)}}};
  IntVector e1(2 * g, Int(0)), f1(2 * g, Int(0));
  e1[0] = 1;
  f1[g] = 1;
  out.translations = {{e1, f1}};
  return out;
}

std::vector<std::pair<Word, Word>> commutator_decomposition(const Word& w_in) {
  std::map<int, long> sums;
  for (int letter : w_in) {
    if (letter == 0) throw InvalidArgument("commutator_decomposition: letter 0 is not allowed");
    sums[std::abs(letter)] += letter > 0 ? 1 : -1;
  }
  for (const auto& [letter, s] : sums)
    if (s != 0) throw InvalidArgument("letter " + std::to_string(letter) + " has nonzero exponent sum");
  // x B x^-1 C = [x, B] * (B C), which is shorter by two letters.
  std::vector<std::pair<Word, Word>> out;
  Word w = w_in;
  while (!w.empty()) {
    const int x = w.front();
    std::size_t j = 1;
    while (w[j] != -x) ++j;
    Word b(w.begin() + 1, w.begin() + j);
    Word rest = b;
    rest.insert(rest.end(), w.begin() + j + 1, w.end());
    out.push_back({{x}, std::move(b)});
    w = std::move(rest);
  }
  return out;
}

SurfaceClass class_from_relator(std::size_t g, const std::vector<IntMatrix>& letters, const Word& w) {
  auto eval = [&](const Word& word) {
    IntMatrix u = IntMatrix::identity(2 * g);
    for (int letter : word) {
      if (letter == 0 || static_cast<std::size_t>(std::abs(letter)) > letters.size())
        throw InvalidArgument("relator letter " + std::to_string(letter) + " outside the alphabet");
      const IntMatrix& m = letters[std::abs(letter) - 1];
      u = u * (letter > 0 ? m : symplectic_inverse(m));
    }
    return u;
  };
  if (eval(w) != IntMatrix::identity(2 * g)) throw RelatorViolation("relator does not evaluate to the identity");
  SurfaceClass c{g, {}};
  for (const auto& [a, b] : commutator_decomposition(w)) c.pairs.push_back({eval(a), eval(b)});
  c.validate();
  return c;
}

IntMatrix translation_constraints(const SurfaceClass& cls) {
  const std::size_t d = 2 * cls.g, h = cls.h();
  IntMatrix out(d, 2 * d * h);
  IntMatrix prefix = IntMatrix::identity(d);
  auto place = [&](std::size_t slot, const IntMatrix& m) {
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) out(r, slot * d + c) += m(r, c);
  };
  // Translation part of a word: sum over letters of rho(prefix) u(letter), with
  // u(x^-1) = -rho(x)^-1 u(x).
  for (std::size_t i = 0; i < h; ++i) {
    const IntMatrix& a = cls.pairs[i].first;
    const IntMatrix& b = cls.pairs[i].second;
    IntMatrix ai = symplectic_inverse(a), bi = symplectic_inverse(b);
    place(2 * i, prefix);
    prefix = prefix * a;
    place(2 * i + 1, prefix);
    prefix = prefix * b;
    place(2 * i, -(prefix * ai));
    prefix = prefix * ai;
    place(2 * i + 1, -(prefix * bi));
    prefix = prefix * bi;
  }
  return out;
}

AffineSurfaceClass random_affine_lift(const SurfaceClass& cls, std::mt19937_64& rng, long bound) {
  const std::size_t d = 2 * cls.g;
  IntMatrix k = kernel_basis(translation_constraints(cls));
  std::uniform_int_distribution<long> coef(-bound, bound);
  IntVector stacked(k.rows(), Int(0));
  for (std::size_t c = 0; c < k.cols(); ++c) stacked = add(stacked, scaled(k.column(c), Int(coef(rng))));
  AffineSurfaceClass out;
  out.base = cls;
  for (std::size_t i = 0; i < cls.h(); ++i) {
    IntVector v(stacked.begin() + 2 * i * d, stacked.begin() + (2 * i + 1) * d);
    IntVector w(stacked.begin() + (2 * i + 1) * d, stacked.begin() + (2 * i + 2) * d);
    out.translations.push_back({v, w});
  }
  return out;
}

IntMatrix random_word_product(const std::vector<IntMatrix>& gens, std::size_t length, std::mt19937_64& rng) {
  if (gens.empty()) throw InvalidArgument("random_word_product: empty generator list");
  IntMatrix out = IntMatrix::identity(gens.front().rows());
  std::uniform_int_distribution<std::size_t> pick(0, 2 * gens.size() - 1);
  for (std::size_t i = 0; i < length; ++i) {
    std::size_t r = pick(rng);
    const IntMatrix& m = gens[r / 2];
    out = out * (r % 2 == 0 ? m : symplectic_inverse(m));
  }
  return out;
}

std::optional<std::size_t> finite_order(const IntMatrix& a, std::size_t bound) {
  IntMatrix id = IntMatrix::identity(a.rows());
  IntMatrix p = a;
  for (std::size_t k = 1; k <= bound; ++k) {
    if (p == id) return k;
    p = p * a;
  }
  return std::nullopt;
}

}  // namespace hcmcg
