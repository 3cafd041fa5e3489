// Copyright 2026 The zkrange Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <span>
#include <vector>

#include "algebra/limbs.h"

namespace zkrange::algebra {

// Point on y^2 = x^3 + b in Jacobian coordinates (X/Z^2, Y/Z^3). `Curve`
// provides `using Field`, `static Field B()`. Identity has Z = 0.
template <class Curve>
class JacobianPoint {
 public:
  using Field = typename Curve::Field;

  JacobianPoint() : x_(Field::One()), y_(Field::One()), z_(Field::Zero()) {}

  static JacobianPoint Identity() { return JacobianPoint(); }

  static JacobianPoint FromAffine(const Field& x, const Field& y) {
    JacobianPoint p;
    p.x_ = x;
    p.y_ = y;
    p.z_ = Field::One();
    return p;
  }

  static bool IsOnCurve(const Field& x, const Field& y) {
    return y.Square() == x.Square() * x + Curve::B();
  }

  bool IsIdentity() const { return z_.IsZero(); }

  // Requires !IsIdentity().
  void ToAffine(Field& x, Field& y) const {
    Field zinv = z_.Inverse();
    Field zinv2 = zinv.Square();
    x = x_ * zinv2;
    y = y_ * zinv2 * zinv;
  }

  JacobianPoint Double() const {
    if (IsIdentity() || y_.IsZero()) return Identity();
    // dbl-2009-l
    Field a = x_.Square();
    Field b = y_.Square();
    Field c = b.Square();
    Field d = ((x_ + b).Square() - a - c).Double();
    Field e = a.Double() + a;
    Field f = e.Square();
    JacobianPoint r;
    r.x_ = f - d.Double();
    Field c8 = c.Double().Double().Double();
    r.y_ = e * (d - r.x_) - c8;
    r.z_ = (y_ * z_).Double();
    return r;
  }

  friend JacobianPoint operator+(const JacobianPoint& p, const JacobianPoint& q) {
    if (p.IsIdentity()) return q;
    if (q.IsIdentity()) return p;
    // add-2007-bl
    Field z1z1 = p.z_.Square();
    Field z2z2 = q.z_.Square();
    Field u1 = p.x_ * z2z2;
    Field u2 = q.x_ * z1z1;
    Field s1 = p.y_ * q.z_ * z2z2;
    Field s2 = q.y_ * p.z_ * z1z1;
    Field h = u2 - u1;
    Field rr = (s2 - s1).Double();
    if (h.IsZero()) {
      if (rr.IsZero()) return p.Double();
      return Identity();
    }
    Field i = h.Double().Square();
    Field j = h * i;
    Field v = u1 * i;
    JacobianPoint r;
    r.x_ = rr.Square() - j - v.Double();
    r.y_ = rr * (v - r.x_) - (s1 * j).Double();
    r.z_ = ((p.z_ + q.z_).Square() - z1z1 - z2z2) * h;
    return r;
  }

  JacobianPoint operator-() const {
    JacobianPoint r = *this;
    r.y_ = -r.y_;
    return r;
  }

  friend JacobianPoint operator-(const JacobianPoint& p, const JacobianPoint& q) {
    return p + (-q);
  }

  JacobianPoint& operator+=(const JacobianPoint& o) { return *this = *this + o; }

  friend bool operator==(const JacobianPoint& p, const JacobianPoint& q) {
    if (p.IsIdentity() || q.IsIdentity()) return p.IsIdentity() && q.IsIdentity();
    Field z1z1 = p.z_.Square();
    Field z2z2 = q.z_.Square();
    if (p.x_ * z2z2 != q.x_ * z1z1) return false;
    return p.y_ * q.z_ * z2z2 == q.y_ * p.z_ * z1z1;
  }

  // Left-to-right with a 4-bit fixed window; exponent as canonical limbs.
  JacobianPoint Mul(const Limbs& k) const {
    std::array<JacobianPoint, 16> table;
    table[0] = Identity();
    for (int i = 1; i < 16; ++i) table[i] = table[i - 1] + *this;
    JacobianPoint acc;
    for (int w = 63; w >= 0; --w) {
      if (!acc.IsIdentity()) {
        acc = acc.Double().Double().Double().Double();
      }
      unsigned nib = static_cast<unsigned>((k[w / 16] >> (4 * (w % 16))) & 0xF);
      if (nib) acc = acc + table[nib];
    }
    return acc;
  }

  const Field& x() const { return x_; }
  const Field& y() const { return y_; }
  const Field& z() const { return z_; }

 private:
  Field x_, y_, z_;
};

// Affine conversion of many points with one inversion (Montgomery's trick).
// Identity points map to (0, 0) and are flagged in `is_identity`.
template <class Curve>
void BatchToAffine(std::span<const JacobianPoint<Curve>> points,
                   std::vector<typename Curve::Field>& xs,
                   std::vector<typename Curve::Field>& ys,
                   std::vector<bool>& is_identity) {
  using Field = typename Curve::Field;
  size_t n = points.size();
  xs.assign(n, Field::Zero());
  ys.assign(n, Field::Zero());
  is_identity.assign(n, false);
  std::vector<Field> prefix(n);
  Field acc = Field::One();
  for (size_t i = 0; i < n; ++i) {
    prefix[i] = acc;
    if (points[i].IsIdentity()) {
      is_identity[i] = true;
      continue;
    }
    acc = acc * points[i].z();
  }
  if (acc.IsZero()) return;
  Field inv = acc.Inverse();
  for (size_t i = n; i-- > 0;) {
    if (is_identity[i]) continue;
    Field zinv = inv * prefix[i];
    inv = inv * points[i].z();
    Field zinv2 = zinv.Square();
    xs[i] = points[i].x() * zinv2;
    ys[i] = points[i].y() * zinv2 * zinv;
  }
}

}  // namespace zkrange::algebra
