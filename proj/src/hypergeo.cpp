#include "belyi/hypergeo.hpp"

#include <functional>

namespace belyi {

namespace {

HR to_real(const Rational& q) {
  return HR(q.get_num().get_str()) / HR(q.get_den().get_str());
}

// 16-point Gauss-Legendre nodes/weights on [-1,1], computed once by Newton on
// the Legendre polynomial.
struct GaussRule {
  std::vector<HR> nodes, weights;
  GaussRule() {
    const int n = 16;
    const HR pi = atan(HR(1)) * 4;
    for (int i = 0; i < n; ++i) {
      HR x = cos(pi * (HR(i) + HR(3) / 4) / (HR(n) + HR(1) / 2));
      for (int it = 0; it < 100; ++it) {
        // Legendre P_n and derivative by recurrence
        HR p0 = 1, p1 = x;
        for (int k = 2; k <= n; ++k) {
          HR p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        HR dp = HR(n) * (x * p1 - p0) / (x * x - 1);
        HR dx = p1 / dp;
        x -= dx;
        if (abs(dx) < ldexp(HR(1), -120)) break;
      }
      HR p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        HR p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      HR dp = HR(n) * (x * p1 - p0) / (x * x - 1);
      nodes.push_back(x);
      weights.push_back(2 / ((1 - x * x) * dp * dp));
    }
  }
};

const GaussRule& gauss16() {
  static GaussRule rule;
  return rule;
}

HC gauss_segment(const std::function<HC(const HR&)>& f, const HR& a, const HR& b) {
  const GaussRule& g = gauss16();
  HC acc = 0;
  HR mid = (a + b) / 2, half = (b - a) / 2;
  for (size_t i = 0; i < g.nodes.size(); ++i)
    acc += HC(g.weights[i]) * f(mid + half * g.nodes[i]);
  return acc * HC(half);
}

// Adaptive composite rule on [0,1] with interval doubling until stable.
HC adaptive_gauss01(const std::function<HC(const HR&)>& f) {
  const HR tol = HR("1e-14");
  HC prev = gauss_segment(f, HR(0), HR(1));
  int pieces = 2;
  for (int depth = 0; depth < 10; ++depth) {
    HC cur = 0;
    for (int i = 0; i < pieces; ++i)
      cur += gauss_segment(f, HR(i) / pieces, HR(i + 1) / pieces);
    if (abs(cur - prev) < tol * (HR(1) + abs(cur))) return cur;
    prev = cur;
    pieces *= 2;
  }
  return prev;
}

bool is_nonpositive_integer(const Rational& q) {
  return q.get_den() == 1 && q.get_num() <= 0;
}

}  // namespace

HC hpg2f1(const HpgParams& p, int precision_bits) {
  if (is_nonpositive_integer(p.c))
    fail(ErrorKind::InvalidParams, "c is a non-positive integer");
  if (abs(p.z) > HR(3) / 4 + HR("1e-12"))
    fail(ErrorKind::InvalidParams, "series evaluation outside |z| <= 0.75");
  const HR a = to_real(p.a), b = to_real(p.b), c = to_real(p.c);
  const HR eps = ldexp(HR(1), -std::max(24, precision_bits / 2) - 8);
  HC term = 1, acc = 1;
  const HR zabs = abs(p.z);
  for (int k = 0; k < 4000; ++k) {
    term *= HC((a + k) * (b + k) / ((c + k) * (k + 1))) * p.z;
    acc += term;
    // geometric tail bound once the term ratio settles under |z|
    if (abs(term) / (1 - zabs) < eps * std::max(HR(1), abs(acc)) && k > 4) return acc;
  }
  fail(ErrorKind::PrecisionError, "series did not reach the tail bound");
}

namespace {

HC segment_integral(const HC& endpoint, const std::function<HC(const HC&)>& f) {
  return adaptive_gauss01([&](const HR& t) { return f(endpoint * HC(t)) * endpoint; });
}

}  // namespace

HC integral_quarter_lattice(const HC& z) {
  HC e = exp(log(z) / 4);
  HC val = segment_integral(e, [](const HC& t) {
    return HC(1) / sqrt(HC(1) - t * t * t * t);
  });
  return val / e;
}

HC integral_sixth_lattice(const HC& z) {
  HC e = exp(log(z) / 6);
  HC val = segment_integral(e, [](const HC& t) {
    return HC(1) / sqrt(HC(1) - pow(t, 6));
  });
  return val / e;
}

HC integral_third_lattice(const HC& z) {
  HC e = exp(log(z) / 9);
  HC val = segment_integral(e, [](const HC& t) {
    return HC(3) * t * t * exp(log(HC(1) - pow(t, 9)) * HC(HR(-2) / 3));
  });
  return val / exp(log(z) / 3);
}

HC hpg2f1_quarter_continued(const HC& z) {
  if (z.real() >= 1 && abs(z.imag()) < HR("1e-8"))
    fail(ErrorKind::SampleRejected, "argument on the branch cut [1, inf)");
  return adaptive_gauss01([&](const HR& s) {
    HC s4 = HC(s * s * s * s);
    return HC(1) / sqrt(HC(1) - s4 * z);
  });
}

IdentityCheckResult verify_isogeny_identity_deg5(const std::vector<HC>& z_samples) {
  IdentityCheckResult out;
  const HC I(0, 1);
  const HC one_two_i = HC(1) + HC(2) * I;
  const HpgParams base{Rational(1, 2), Rational(1, 4), Rational(5, 4), HC(0)};
  for (const HC& z : z_samples) {
    IdentitySample s;
    s.z = z;
    s.transformed = z * pow(z - HC(1) - HC(2) * I, 4) / pow(one_two_i * z - HC(1), 4);
    HC pre = (HC(1) - z / one_two_i) / (HC(1) - one_two_i * z);
    try {
      HpgParams lhsp = base;
      lhsp.z = z;
      HC lhs = hpg2f1(lhsp);
      HC rhs;
      if (abs(s.transformed) <= HR(3) / 4) {
        HpgParams rp = base;
        rp.z = s.transformed;
        rhs = pre * hpg2f1(rp);
      } else if (abs(z) <= HR("0.105")) {
        rhs = pre * hpg2f1_quarter_continued(s.transformed);
      } else {
        fail(ErrorKind::SampleRejected,
             "transformed argument outside the working disc");
      }
      s.accepted = true;
      s.residual = static_cast<double>(abs(lhs - rhs));
      out.max_residual = std::max(out.max_residual, s.residual);
      ++out.accepted;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SampleRejected) throw;
      s.accepted = false;
      ++out.rejected;
    }
    out.samples.push_back(s);
  }
  return out;
}

std::vector<HC> default_identity_samples() {
  return {HC(HR("0.001")), HC(HR("0.005")), HC(HR("0.01")),  HC(HR("0.02")),
          HC(HR("0.05")),  HC(HR("0.1")),   HC(HR("-0.1")),  HC(HR("0.05"), HR("0.05")),
          HC(HR(0), HR("0.08")), HC(HR("-0.03"), HR("-0.04"))};
}

}  // namespace belyi
