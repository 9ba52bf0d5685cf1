/*
 * Copyright 2026 The SCP-ABE Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "scpabe/type_a_group.h"

#include <string>
#include <utility>

#include "scpabe/errors.h"

namespace scpabe {

namespace {

constexpr std::string_view kHashDomain = "scpabe/type-a/hash-to-g0/v1";
constexpr std::string_view kGeneratorDomain = "scpabe/type-a/generator/v1";

// Arithmetic in F_q; all inputs and outputs reduced into [0, q).
class Fq {
 public:
  explicit Fq(const mpz_class& q) : q_(q) {}

  mpz_class reduce(const mpz_class& v) const {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), q_.get_mpz_t());
    return r;
  }
  mpz_class add(const mpz_class& a, const mpz_class& b) const {
    mpz_class r = a + b;
    if (r >= q_) r -= q_;
    return r;
  }
  mpz_class sub(const mpz_class& a, const mpz_class& b) const {
    mpz_class r = a - b;
    if (sgn(r) < 0) r += q_;
    return r;
  }
  mpz_class neg(const mpz_class& a) const {
    return sgn(a) == 0 ? a : mpz_class(q_ - a);
  }
  mpz_class mul(const mpz_class& a, const mpz_class& b) const {
    return reduce(a * b);
  }
  mpz_class sqr(const mpz_class& a) const { return reduce(a * a); }
  mpz_class small(const mpz_class& a, unsigned k) const { return reduce(a * k); }
  mpz_class inv(const mpz_class& a) const {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), q_.get_mpz_t()) == 0) {
      throw Error("F_q: inverse of zero");
    }
    return r;
  }
  mpz_class pow(const mpz_class& a, const mpz_class& e) const {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), q_.get_mpz_t());
    return r;
  }
  const mpz_class& modulus() const { return q_; }

 private:
  const mpz_class& q_;
};

struct Fq2 {
  mpz_class re;
  mpz_class im;
};

Fq2 fq2_mul(const Fq& f, const Fq2& a, const Fq2& b) {
  mpz_class t0 = a.re * b.re;
  mpz_class t1 = a.im * b.im;
  mpz_class cross = (a.re + a.im) * (b.re + b.im);
  return Fq2{f.reduce(t0 - t1), f.reduce(cross - t0 - t1)};
}

Fq2 fq2_sqr(const Fq& f, const Fq2& a) {
  mpz_class re = (a.re + a.im) * (a.re - a.im);
  mpz_class im = a.re * a.im;
  return Fq2{f.reduce(re), f.reduce(im * 2)};
}

Fq2 fq2_conj(const Fq& f, const Fq2& a) { return Fq2{a.re, f.neg(a.im)}; }

Fq2 fq2_inv(const Fq& f, const Fq2& a) {
  mpz_class norm_inv = f.inv(f.reduce(a.re * a.re + a.im * a.im));
  return Fq2{f.mul(a.re, norm_inv), f.mul(f.neg(a.im), norm_inv)};
}

Fq2 fq2_pow(const Fq& f, const Fq2& base, const mpz_class& e) {
  Fq2 acc{1, 0};
  if (sgn(e) == 0) return acc;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    acc = fq2_sqr(f, acc);
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = fq2_mul(f, acc, base);
  }
  return acc;
}

// Jacobian coordinates (X/Z^2, Y/Z^3); Z == 0 is the point at infinity.
struct Jacobian {
  mpz_class x;
  mpz_class y;
  mpz_class z;
};

Jacobian jac_double(const Fq& f, const Jacobian& p) {
  if (sgn(p.z) == 0 || sgn(p.y) == 0) return Jacobian{1, 1, 0};
  mpz_class xx = f.sqr(p.x);
  mpz_class yy = f.sqr(p.y);
  mpz_class yyyy = f.sqr(yy);
  mpz_class zz = f.sqr(p.z);
  mpz_class s = f.small(f.sub(f.sub(f.sqr(f.add(p.x, yy)), xx), yyyy), 2);
  // a = 1 for y^2 = x^3 + x.
  mpz_class m = f.add(f.small(xx, 3), f.sqr(zz));
  mpz_class x3 = f.sub(f.sqr(m), f.small(s, 2));
  mpz_class y3 = f.sub(f.mul(m, f.sub(s, x3)), f.small(yyyy, 8));
  mpz_class z3 = f.sub(f.sub(f.sqr(f.add(p.y, p.z)), yy), zz);
  return Jacobian{std::move(x3), std::move(y3), std::move(z3)};
}

// p + (qx, qy) with the second operand affine and finite.
Jacobian jac_add_affine(const Fq& f, const Jacobian& p, const mpz_class& qx,
                        const mpz_class& qy) {
  if (sgn(p.z) == 0) return Jacobian{qx, qy, 1};
  mpz_class z1z1 = f.sqr(p.z);
  mpz_class u2 = f.mul(qx, z1z1);
  mpz_class s2 = f.mul(qy, f.mul(p.z, z1z1));
  mpz_class h = f.sub(u2, p.x);
  mpz_class rr = f.small(f.sub(s2, p.y), 2);
  if (sgn(h) == 0) {
    if (sgn(rr) == 0) return jac_double(f, p);
    return Jacobian{1, 1, 0};
  }
  mpz_class hh = f.sqr(h);
  mpz_class i = f.small(hh, 4);
  mpz_class j = f.mul(h, i);
  mpz_class v = f.mul(p.x, i);
  mpz_class x3 = f.sub(f.sub(f.sqr(rr), j), f.small(v, 2));
  mpz_class y3 = f.sub(f.mul(rr, f.sub(v, x3)), f.small(f.mul(p.y, j), 2));
  mpz_class z3 = f.sub(f.sub(f.sqr(f.add(p.z, h)), z1z1), hh);
  return Jacobian{std::move(x3), std::move(y3), std::move(z3)};
}

TypeAGroup::G0 to_affine(const Fq& f, const Jacobian& p) {
  if (sgn(p.z) == 0) return TypeAGroup::G0{};
  mpz_class zi = f.inv(p.z);
  mpz_class zi2 = f.sqr(zi);
  return TypeAGroup::G0{f.mul(p.x, zi2), f.mul(p.y, f.mul(zi2, zi)), false};
}

bool is_zero(std::span<const std::uint8_t> bytes) {
  for (auto b : bytes) {
    if (b != 0) return false;
  }
  return true;
}

}  // namespace

const TypeAParams& TypeAParams::standard() {
  static const TypeAParams params{
      mpz_class("8780710799663312522437781984754049815806883199414208211028653"
                "3992664756308802229570786251794226622214231558587695823174592"
                "77713367317481324925129998224791"),
      mpz_class("730750818665451621361119245571504901405976559617"),
      mpz_class("1201601226489114607938882136674053420480295440125131182291961"
                "5131047207289359704531102844802183906537786776"),
  };
  return params;
}

TypeAGroup::TypeAGroup() : TypeAGroup(TypeAParams::standard()) {}

TypeAGroup::TypeAGroup(TypeAParams params)
    : params_(std::move(params)),
      field_(params_.r),
      coord_bytes_(byte_length(params_.q)) {
  if (params_.q % 4 != 3) throw ValidationError("type-A: q must be 3 mod 4");
  if (params_.h * params_.r != params_.q + 1) {
    throw ValidationError("type-A: q + 1 must equal h * r");
  }
  if (mpz_probab_prime_p(params_.q.get_mpz_t(), 40) == 0 ||
      mpz_probab_prime_p(params_.r.get_mpz_t(), 40) == 0) {
    throw ValidationError("type-A: q and r must be prime");
  }
  generator_ = map_to_g0(kGeneratorDomain, "g");
  gt_generator_ = pair(generator_, generator_);
  descriptor_.provider = ProviderId::kTypeA;
  descriptor_.order = params_.r;
  descriptor_.parameters = "y^2=x^3+x;q=" + params_.q.get_str() +
                           ";h=" + params_.h.get_str();
  descriptor_.scalar_bytes = field_.byte_length();
  descriptor_.g0_bytes = 2 * coord_bytes_;
  descriptor_.g1_bytes = 2 * coord_bytes_;
  descriptor_.generator = encode(generator_);
}

bool TypeAGroup::on_curve(const G0& a) const {
  if (a.infinity) return true;
  Fq f(params_.q);
  mpz_class lhs = f.sqr(a.y);
  mpz_class rhs = f.add(f.mul(f.sqr(a.x), a.x), a.x);
  return lhs == rhs;
}

TypeAGroup::G0 TypeAGroup::multiply(const G0& a, const mpz_class& k) const {
  if (a.infinity || sgn(k) == 0) return G0{};
  Fq f(params_.q);
  Jacobian acc{1, 1, 0};
  std::size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    acc = jac_double(f, acc);
    if (mpz_tstbit(k.get_mpz_t(), i)) acc = jac_add_affine(f, acc, a.x, a.y);
  }
  return to_affine(f, acc);
}

TypeAGroup::G0 TypeAGroup::mul(const G0& a, const G0& b) const {
  if (a.infinity) return b;
  if (b.infinity) return a;
  Fq f(params_.q);
  return to_affine(f, jac_add_affine(f, Jacobian{a.x, a.y, 1}, b.x, b.y));
}

TypeAGroup::G0 TypeAGroup::exp(const G0& a, const Scalar& k) const {
  return multiply(a, k.value);
}

TypeAGroup::G1 TypeAGroup::pair(const G0& p, const G0& q) const {
  if (p.infinity || q.infinity) return gt_one();
  Fq f(params_.q);
  // Miller loop for f_{r,P} evaluated at psi(Q) = (-xQ, i*yQ). Vertical
  // lines take values in F_q and vanish under the final exponentiation, so
  // they are skipped.
  Fq2 acc{1, 0};
  mpz_class tx = p.x;
  mpz_class ty = p.y;
  bool t_infinity = false;
  mpz_srcptr order = params_.r.get_mpz_t();
  std::size_t bits = mpz_sizeinbase(order, 2);
  auto line = [&](const mpz_class& slope) {
    // y - yT - slope * (x - xT) at psi(Q).
    return Fq2{f.sub(f.mul(slope, f.add(q.x, tx)), ty), q.y};
  };
  for (std::size_t i = bits - 1; i-- > 0;) {
    if (t_infinity) break;
    mpz_class slope = f.mul(f.add(f.small(f.sqr(tx), 3), 1), f.inv(f.small(ty, 2)));
    acc = fq2_mul(f, fq2_sqr(f, acc), line(slope));
    mpz_class nx = f.sub(f.sqr(slope), f.small(tx, 2));
    ty = f.sub(f.mul(slope, f.sub(tx, nx)), ty);
    tx = std::move(nx);
    if (mpz_tstbit(order, i)) {
      if (tx == p.x) {
        // T = -P: vertical line, T + P is the identity.
        t_infinity = true;
        continue;
      }
      mpz_class add_slope = f.mul(f.sub(p.y, ty), f.inv(f.sub(p.x, tx)));
      acc = fq2_mul(f, acc, line(add_slope));
      mpz_class ax = f.sub(f.sub(f.sqr(add_slope), tx), p.x);
      ty = f.sub(f.mul(add_slope, f.sub(tx, ax)), ty);
      tx = std::move(ax);
    }
  }
  // Final exponentiation by (q^2 - 1) / r = (q - 1) * h; the q-power
  // Frobenius on F_q[i] is conjugation.
  Fq2 unitary = fq2_mul(f, fq2_conj(f, acc), fq2_inv(f, acc));
  Fq2 out = fq2_pow(f, unitary, params_.h);
  return G1{std::move(out.re), std::move(out.im)};
}

TypeAGroup::G1 TypeAGroup::gt_pow(const G1& a, const mpz_class& k) const {
  Fq f(params_.q);
  Fq2 r = fq2_pow(f, Fq2{a.re, a.im}, k);
  return G1{std::move(r.re), std::move(r.im)};
}

TypeAGroup::G1 TypeAGroup::gt_mul(const G1& a, const G1& b) const {
  Fq f(params_.q);
  Fq2 r = fq2_mul(f, Fq2{a.re, a.im}, Fq2{b.re, b.im});
  return G1{std::move(r.re), std::move(r.im)};
}

TypeAGroup::G1 TypeAGroup::gt_div(const G1& a, const G1& b) const {
  // G1 elements have norm 1, so the inverse is the conjugate.
  Fq f(params_.q);
  Fq2 r = fq2_mul(f, Fq2{a.re, a.im}, fq2_conj(f, Fq2{b.re, b.im}));
  return G1{std::move(r.re), std::move(r.im)};
}

TypeAGroup::G1 TypeAGroup::gt_exp(const G1& a, const Scalar& k) const {
  return gt_pow(a, k.value);
}

TypeAGroup::G1 TypeAGroup::random_gt(RandomSource& rng) const {
  return gt_exp(gt_generator_, field_.random(rng));
}

TypeAGroup::G0 TypeAGroup::map_to_g0(std::string_view domain,
                                     std::string_view label) const {
  Fq f(params_.q);
  const mpz_class sqrt_exp = (params_.q + 1) / 4;
  const mpz_class legendre_exp = (params_.q - 1) / 2;
  for (std::uint32_t counter = 0;; ++counter) {
    std::string material(domain);
    material.push_back('\0');
    material.append(label);
    for (int shift = 24; shift >= 0; shift -= 8) {
      material.push_back(static_cast<char>((counter >> shift) & 0xff));
    }
    // Three digests give 768 bits, well above the 512-bit modulus.
    Bytes wide;
    for (char block = 1; block <= 3; ++block) {
      auto d = sha256(material + block);
      wide.insert(wide.end(), d.begin(), d.end());
    }
    mpz_class x = f.reduce(from_be(wide));
    mpz_class rhs = f.add(f.mul(f.sqr(x), x), x);
    if (sgn(rhs) == 0 || f.pow(rhs, legendre_exp) != 1) continue;
    G0 point{x, f.pow(rhs, sqrt_exp), false};
    G0 cleared = multiply(point, params_.h);
    if (!cleared.infinity) return cleared;
  }
}

TypeAGroup::G0 TypeAGroup::hash_to_g0(std::string_view label) const {
  if (label.empty()) throw ValidationError("hash_to_g0: empty label");
  return map_to_g0(kHashDomain, label);
}

Bytes TypeAGroup::encode(const G0& a) const {
  if (a.infinity) return Bytes(2 * coord_bytes_, 0);
  Bytes out = to_fixed_be(a.x, coord_bytes_);
  Bytes y = to_fixed_be(a.y, coord_bytes_);
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

Bytes TypeAGroup::encode(const G1& a) const {
  Bytes out = to_fixed_be(a.re, coord_bytes_);
  Bytes im = to_fixed_be(a.im, coord_bytes_);
  out.insert(out.end(), im.begin(), im.end());
  return out;
}

TypeAGroup::G0 TypeAGroup::decode_g0(std::span<const std::uint8_t> bytes) const {
  if (bytes.size() != 2 * coord_bytes_) {
    throw FormatError("type-A G0: wrong encoding length");
  }
  if (is_zero(bytes)) return G0{};
  G0 p{from_be(bytes.first(coord_bytes_)), from_be(bytes.subspan(coord_bytes_)),
       false};
  if (p.x >= params_.q || p.y >= params_.q) {
    throw FormatError("type-A G0: coordinate not reduced");
  }
  if (!on_curve(p)) throw FormatError("type-A G0: point not on curve");
  if (!multiply(p, params_.r).infinity) {
    throw FormatError("type-A G0: point outside the prime-order subgroup");
  }
  return p;
}

TypeAGroup::G1 TypeAGroup::decode_g1(std::span<const std::uint8_t> bytes) const {
  if (bytes.size() != 2 * coord_bytes_) {
    throw FormatError("type-A G1: wrong encoding length");
  }
  G1 e{from_be(bytes.first(coord_bytes_)), from_be(bytes.subspan(coord_bytes_))};
  if (e.re >= params_.q || e.im >= params_.q) {
    throw FormatError("type-A G1: coordinate not reduced");
  }
  Fq f(params_.q);
  if (f.add(f.sqr(e.re), f.sqr(e.im)) != 1 || !(gt_pow(e, params_.r) == gt_one())) {
    throw FormatError("type-A G1: element outside the order-r subgroup");
  }
  return e;
}

}  // namespace scpabe
