#include "bergman/funcspace.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <numbers>
#include <string>

#include "bergman/special.hpp"

namespace bergman {

namespace {

Complex ipow(Complex z, int k) {
  Complex r = 1.0;
  Complex base = z;
  int e = k;
  while (e > 0) {
    if (e & 1) {
      r *= base;
    }
    base *= base;
    e >>= 1;
  }
  return r;
}

void check_in_closed_disk(Complex z, const char* who) {
  if (std::abs(z) > 1.0 + 1e-12) {
    throw std::domain_error(std::string(who) + ": |z| > 1");
  }
}

}  // namespace

Complex mobius(Complex a, Complex z) {
  if (std::abs(a) >= 1.0) {
    throw std::domain_error("mobius: |a| must be < 1");
  }
  check_in_closed_disk(z, "mobius");
  return (a - z) / (1.0 - std::conj(a) * z);
}

struct AnalyticFunction::Node {
  enum class Tag { Polynomial, Kernel, Power, Isometry, Scaled };
  Tag tag;

  CoeffVector coeffs;  // Polynomial

  Complex zeta{};      // Kernel
  double exponent{};   // Kernel
  Complex scale{1.0};  // Kernel

  std::shared_ptr<const Node> inner;  // Power / Isometry / Scaled
  int k{};                            // Power

  Complex a{};     // Isometry
  double alpha{};  // Isometry

  Complex factor{1.0};  // Scaled
};

using Node = AnalyticFunction::Node;
using Tag = Node::Tag;

namespace {

Complex eval_node(const Node& n, Complex z);
Complex deriv_node(const Node& n, Complex z);

// (phi_a')^{(alpha+2)/2}, continuous on the closed disk. phi_a'(z) =
// -(1-|a|^2)/(1-conj(a)z)^2 and Re(1-conj(a)z) > 0, so the principal
// logarithm of (1-conj(a)z) is continuous; the constant phase e^{i pi q}
// matches the principal value at z = 0.
Complex isometry_weight(Complex a, double alpha, Complex z) {
  const double q = 0.5 * (alpha + 2.0);
  const Complex d = 1.0 - std::conj(a) * z;
  const double one_minus = 1.0 - std::norm(a);
  const Complex log_w = Complex(0.0, std::numbers::pi * q) +
                        q * std::log(one_minus) - 2.0 * q * std::log(d);
  return std::exp(log_w);
}

Complex eval_node(const Node& n, Complex z) {
  switch (n.tag) {
    case Tag::Polynomial: {
      Complex acc = 0.0;
      for (Eigen::Index i = n.coeffs.size() - 1; i >= 0; --i) {
        acc = acc * z + n.coeffs[i];
      }
      return acc;
    }
    case Tag::Kernel: {
      const Complex d = 1.0 - std::conj(n.zeta) * z;
      return n.scale * std::exp(-n.exponent * std::log(d));
    }
    case Tag::Power:
      return ipow(eval_node(*n.inner, z), n.k);
    case Tag::Isometry: {
      const Complex w = mobius(n.a, z);
      return isometry_weight(n.a, n.alpha, z) * eval_node(*n.inner, w);
    }
    case Tag::Scaled:
      return n.factor * eval_node(*n.inner, z);
  }
  return 0.0;
}

Complex deriv_node(const Node& n, Complex z) {
  switch (n.tag) {
    case Tag::Polynomial: {
      Complex acc = 0.0;
      for (Eigen::Index i = n.coeffs.size() - 1; i >= 1; --i) {
        acc = acc * z + static_cast<double>(i) * n.coeffs[i];
      }
      return acc;
    }
    case Tag::Kernel: {
      const Complex d = 1.0 - std::conj(n.zeta) * z;
      return n.scale * n.exponent * std::conj(n.zeta) *
             std::exp(-(n.exponent + 1.0) * std::log(d));
    }
    case Tag::Power: {
      const Complex v = eval_node(*n.inner, z);
      return static_cast<double>(n.k) * ipow(v, n.k - 1) *
             deriv_node(*n.inner, z);
    }
    case Tag::Isometry: {
      const Complex d = 1.0 - std::conj(n.a) * z;
      const Complex w = (n.a - z) / d;
      const Complex weight = isometry_weight(n.a, n.alpha, z);
      const Complex phi_prime = (std::norm(n.a) - 1.0) / (d * d);
      const double q = 0.5 * (n.alpha + 2.0);
      // d/dz [ (phi')^q f(phi) ] = (phi')^q [ q phi''/phi' f(phi)
      //                                       + phi' f'(phi) ]
      const Complex log_deriv = 2.0 * std::conj(n.a) / d;
      return weight * (q * log_deriv * eval_node(*n.inner, w) +
                       phi_prime * deriv_node(*n.inner, w));
    }
    case Tag::Scaled:
      return n.factor * deriv_node(*n.inner, z);
  }
  return 0.0;
}

bool exact_coeffs_node(const Node& n) {
  switch (n.tag) {
    case Tag::Polynomial:
    case Tag::Kernel:
      return true;
    case Tag::Power:
    case Tag::Scaled:
      return exact_coeffs_node(*n.inner);
    case Tag::Isometry:
      return false;
  }
  return false;
}

CoeffVector coeffs_node(const Node& n, int N);

CoeffVector convolve_truncated(const CoeffVector& a, const CoeffVector& b,
                               int N) {
  CoeffVector out = CoeffVector::Zero(N + 1);
  for (int i = 0; i <= N && i < a.size(); ++i) {
    for (int j = 0; j + i <= N && j < b.size(); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// Sample on |z| = rho and invert the DFT; geometric decay at rho = 0.5
// bounds the aliasing, which the doubled-M recomputation verifies. The
// aliasing check and the noise floor act on the rho^n-scaled Fourier data:
// dividing by rho^n amplifies rounding noise like 2^n, so scaled modes at
// the floor are zeroed rather than promoted to spurious large coefficients.
CoeffVector coeffs_by_sampling(const Node& n, int N) {
  // Dividing the Fourier data by rho^j amplifies rounding noise by rho^{-j},
  // so the radius must grow with N to keep the amplification at the top
  // coefficient bounded (here by 1e6); a fixed rho = 0.5 already drowns
  // slowly decaying coefficient tails near j = 45.
  const double kRho = std::max(0.5, std::pow(10.0, -6.0 / (N + 1)));
  int M = 256;
  while (M < 8 * (N + 1)) {
    M *= 2;
  }
  Eigen::FFT<double> fft;
  const auto extract = [&](int m) {
    Eigen::VectorXcd samples(m);
    for (int j = 0; j < m; ++j) {
      const double th = 2.0 * std::numbers::pi * j / m;
      samples[j] = eval_node(n, kRho * Complex(std::cos(th), std::sin(th)));
    }
    Eigen::VectorXcd hat(m);
    fft.fwd(hat, samples);
    CoeffVector out(N + 1);
    for (int j = 0; j <= N; ++j) {
      out[j] = hat[j] / static_cast<double>(m);
    }
    return out;
  };
  const CoeffVector first = extract(M);
  CoeffVector second = extract(2 * M);
  const double scale = 1.0 + first.cwiseAbs().maxCoeff();
  const double resid = (first - second).cwiseAbs().maxCoeff();
  if (resid > 1e-9 * scale) {
    throw std::runtime_error(
        "coefficients: de-aliasing residual above tolerance");
  }
  const double floor = 1e-13 * scale;
  double rpow = 1.0;
  for (int j = 0; j <= N; ++j) {
    second[j] = std::abs(second[j]) <= floor ? 0.0 : second[j] / rpow;
    rpow *= kRho;
  }
  return second;
}

CoeffVector coeffs_node(const Node& n, int N) {
  switch (n.tag) {
    case Tag::Polynomial: {
      CoeffVector out = CoeffVector::Zero(N + 1);
      const int m = std::min<int>(N + 1, static_cast<int>(n.coeffs.size()));
      out.head(m) = n.coeffs.head(m);
      return out;
    }
    case Tag::Kernel: {
      CoeffVector out(N + 1);
      const Complex zbar = std::conj(n.zeta);
      Complex zp = 1.0;
      for (int j = 0; j <= N; ++j) {
        out[j] = n.scale * special::c_coeff(n.exponent, j) * zp;
        zp *= zbar;
      }
      return out;
    }
    case Tag::Power: {
      if (!exact_coeffs_node(*n.inner)) {
        return coeffs_by_sampling(n, N);
      }
      const CoeffVector base = coeffs_node(*n.inner, N);
      CoeffVector acc = CoeffVector::Zero(N + 1);
      acc[0] = 1.0;
      for (int i = 0; i < n.k; ++i) {
        acc = convolve_truncated(acc, base, N);
      }
      return acc;
    }
    case Tag::Isometry:
      return coeffs_by_sampling(n, N);
    case Tag::Scaled:
      return n.factor * coeffs_node(*n.inner, N);
  }
  return CoeffVector::Zero(N + 1);
}

AnalyticFunction wrap(Node node) {
  return AnalyticFunction(std::make_shared<const Node>(std::move(node)));
}

}  // namespace

AnalyticFunction AnalyticFunction::polynomial(CoeffVector coeffs) {
  Node n;
  n.tag = Tag::Polynomial;
  n.coeffs = coeffs.size() > 0 ? std::move(coeffs)
                               : CoeffVector::Zero(1).eval();
  return wrap(std::move(n));
}

AnalyticFunction AnalyticFunction::kernel_raw(Complex zeta, double exponent,
                                              Complex scale) {
  if (std::abs(zeta) >= 1.0) {
    throw std::domain_error("kernel: |zeta| must be < 1");
  }
  if (!(exponent > 0.0)) {
    throw std::domain_error("kernel: exponent must be positive");
  }
  Node n;
  n.tag = Tag::Kernel;
  n.zeta = zeta;
  n.exponent = exponent;
  n.scale = scale;
  return wrap(std::move(n));
}

AnalyticFunction AnalyticFunction::power(const AnalyticFunction& f, int k) {
  if (k < 1) {
    throw std::domain_error("power: k must be >= 1");
  }
  if (k == 1) {
    return f;
  }
  const Node& in = f.node();
  if (in.tag == Tag::Kernel) {
    return kernel_raw(in.zeta, in.exponent * k, ipow(in.scale, k));
  }
  if (in.tag == Tag::Power) {
    Node n;
    n.tag = Tag::Power;
    n.inner = in.inner;
    n.k = in.k * k;
    return wrap(std::move(n));
  }
  Node n;
  n.tag = Tag::Power;
  n.inner = std::make_shared<const Node>(in);
  n.k = k;
  return wrap(std::move(n));
}

AnalyticFunction AnalyticFunction::isometry_image(Complex a, double alpha,
                                                  const AnalyticFunction& f) {
  if (std::abs(a) >= 1.0) {
    throw std::domain_error("isometry_image: |a| must be < 1");
  }
  if (!(alpha >= -1.0)) {
    throw std::domain_error("isometry_image: alpha must be >= -1");
  }
  Node n;
  n.tag = Tag::Isometry;
  n.inner = std::make_shared<const Node>(f.node());
  n.a = a;
  n.alpha = alpha;
  return wrap(std::move(n));
}

AnalyticFunction AnalyticFunction::scaled(const AnalyticFunction& f,
                                          Complex factor) {
  Node n;
  n.tag = Tag::Scaled;
  n.inner = std::make_shared<const Node>(f.node());
  n.factor = factor;
  return wrap(std::move(n));
}

Complex AnalyticFunction::eval(Complex z) const {
  check_in_closed_disk(z, "eval");
  return eval_node(*node_, z);
}

Complex AnalyticFunction::deriv(Complex z) const {
  check_in_closed_disk(z, "deriv");
  return deriv_node(*node_, z);
}

CoeffVector AnalyticFunction::coefficients(int N) const {
  if (N < 0) {
    throw std::domain_error("coefficients: N must be >= 0");
  }
  return coeffs_node(*node_, N);
}

bool AnalyticFunction::has_exact_coeffs() const {
  return exact_coeffs_node(*node_);
}

AnalyticFunction kernel(Complex zeta, double alpha) {
  if (!(alpha >= -1.0)) {
    throw std::domain_error("kernel: alpha must be >= -1");
  }
  return AnalyticFunction::kernel_raw(zeta, alpha + 2.0, 1.0);
}

AnalyticFunction normalized_kernel(Complex zeta, double alpha) {
  if (!(alpha >= -1.0)) {
    throw std::domain_error("normalized_kernel: alpha must be >= -1");
  }
  if (std::abs(zeta) >= 1.0) {
    throw std::domain_error("normalized_kernel: |zeta| must be < 1");
  }
  // ||K_zeta||_{A^2_alpha}^2 = (1 - |zeta|^2)^{-(alpha+2)}.
  const double s = std::pow(1.0 - std::norm(zeta), 0.5 * (alpha + 2.0));
  return AnalyticFunction::kernel_raw(zeta, alpha + 2.0, s);
}

AnalyticFunction apply_isometry(Complex a, double alpha,
                                const AnalyticFunction& f) {
  return AnalyticFunction::isometry_image(a, alpha, f);
}

}  // namespace bergman
