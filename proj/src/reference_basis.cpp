#include "rackhopf/deform.hpp"

namespace rackhopf {

// Reduced Groebner basis elements of E_alpha(mu1, mu2), n = 4, beyond the defining relations.
// aij = alpha_(ij), m1 = mu1, m2 = mu2; parenthesised sums are single coefficients.
const std::vector<std::string>& reference_basis_text() {
  static const std::vector<std::string> k{
      "x13*x12*x13 - x12*x13*x12 + (-a12+a13)*x23 - m2*x13 + m2*x12",
      "x14*x12*x14 - x12*x14*x12 + (-a12+a14)*x24 - m2*x14 + m2*x12",
      "x14*x13*x12 + x14*x12*x23 - x23*x14*x13 - m2*x14 + m1*x13",
      "x14*x13*x23 + x14*x12*x13 - x23*x14*x12 - m2*x14 + m1*x12",
      "x14*x13*x14 - x13*x14*x13 + (-a13+a14)*x34 - m2*x14 + m2*x13",
      "x24*x23*x14 - x14*x12*x23 - x12*x24*x23 - m1*x24 + m2*x23",
      "x24*x23*x24 - x23*x24*x23 + (-a23+a24)*x34 - m2*x24 + m2*x23",
      "x14*x12*x13*x23 - x23*x14*x12*x23 + a23*x14*x13 + m2*x23*x14 + m1*x12*x23 - m1*m2",
      "x14*x12*x13*x14 + x13*x14*x12*x13 + x12*x13*x14*x12 + (a13-a14)*x24*x34 + m1*x14*x13 -"
      " m2*x14*x12 + (-a12+a13)*x23*x24 - m2*x13*x14 + m1*x13*x12 + m1*x12*x14 - m2*x12*x13 -"
      " a13*m2 - m1*m2 + m2*m2",
      "x14*x12*x23*x14 + x12*x14*x12*x23 + (a12-a14)*x24*x23 - m1*x14*x12 - m2*x23*x14 -"
      " m2*x12*x23 + m1*m2",
      "x14*x12*x13*x12*x23 - x23*x14*x12*x13*x12 - m2*x14*x12*x13 - m2*x23*x14*x13 +"
      " m2*x23*x14*x12 + m1*x12*x13*x12 + (a12*a13+a12*a23-a13*a23)*x14 + m1*m2*x13 - m1*m2*x12",
      "x14*x12*x13*x12*x14*x12 + x13*x14*x12*x13*x12*x14 + (a13-a14)*x14*x13*x24*x34 +"
      " (a12-a13)*x14*x12*x13*x24 - m2*x14*x12*x13*x12 + (-a12+a13)*x23*x14*x12*x24 -"
      " m2*x13*x14*x12*x13 - m1*x13*x12*x14*x13 - m2*x13*x12*x14*x12 +"
      " (-a13+a14)*x12*x14*x13*x34 + m1*x12*x14*x12*x23 - m1*x12*x23*x14*x13 -"
      " m2*x12*x13*x14*x12 - m2*x12*x13*x12*x14 + (-a13*m2+a14*m2)*x24*x34 +"
      " (a12*m1-a14*m1)*x24*x23 + (-a13*m1-m1*m1+a14*m1)*x14*x34 + (a13*m2-a14*m2)*x14*x24 +"
      " (a12*m1+m2*m2)*x14*x12 + (a13*m1-a14*m1)*x23*x34 + (a12*m2-a13*m2)*x23*x24 +"
      " (a13*m2-a14*m2)*x13*x34 + (-a12*m2+a14*m2)*x13*x24 + (a12*m1-m1*m1)*x13*x14 +"
      " m2*m2*x13*x12 + (a12*m1-a13*m1)*x12*x24 + (-a14*m2-m1*m2+m2*m2)*x12*x14 +"
      " (a12*a14+m2*m2)*x12*x13 - a12*a14*m2 - a12*m1*m2 + a13*m1*m2 + a14*m2*m2 + m1*m1*m2 -"
      " m2*m2*m2",
      "x14*x12*x13*x12*x14*x13 + x12*x14*x12*x13*x12*x14 + (-a12+a14)*x14*x12*x24*x23 +"
      " (-a13+a14)*x14*x12*x23*x34 - m2*x14*x12*x13*x12 + (-a12+a14)*x13*x14*x12*x24 -"
      " m1*x13*x14*x12*x13 - m2*x13*x12*x14*x13 + m2*x12*x14*x12*x23 - m2*x12*x14*x12*x13 -"
      " m2*x12*x23*x14*x13 - m1*x12*x13*x14*x12 - m2*x12*x13*x12*x14 + (-a13*m1+a14*m1)*x24*x34"
      " + (a12*m2-a14*m2)*x24*x23 + (-a12*m1+a14*m1)*x14*x24 + (a12*m1-m1*m1)*x14*x13 +"
      " (-a14*m2+m2*m2)*x14*x12 + (a13*m2-a14*m2)*x23*x34 + (a12*m1-a13*m1)*x23*x24 +"
      " (a12*m2-a14*m2)*x13*x24 + (a12*a14-m1*m1+m2*m2)*x13*x12 + (a12*m1-m1*m1)*x12*x14 +"
      " (m1*m2+m2*m2)*x12*x13 - a12*a14*m2 - a12*m1*m2 + a13*m1*m2 + a14*m2*m2 + m1*m1*m2 -"
      " m2*m2*m2",
  };
  return k;
}

}  // namespace rackhopf
