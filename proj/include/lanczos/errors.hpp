#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace lanczos {

/// Base of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-supplied parameter is outside the documented domain
/// (invalid free parameter, term count, index, grid size, ...).
class parameter_error : public error {
public:
    using error::error;
};

/// Argument outside the domain of a numeric routine.
class domain_error : public error {
public:
    using error::error;
};

/// factorial(n) for n beyond the double-precision range.
class overflow_domain_error : public domain_error {
public:
    explicit overflow_domain_error(int n)
        : domain_error("factorial(" + std::to_string(n) + ") is outside [0, 170]"), n_(n) {}
    int argument() const noexcept { return n_; }

private:
    int n_;
};

/// Evaluation hit (or came within tolerance of) a pole of the gamma function
/// or of the rational series factors.
class pole_error : public domain_error {
public:
    explicit pole_error(long long pole)
        : domain_error("pole at z = " + std::to_string(pole)), pole_(pole) {}
    long long pole() const noexcept { return pole_; }

private:
    long long pole_;
};

/// Exact-value oracle asked for an argument that is neither a positive
/// integer nor a positive half-odd-integer.
class oracle_domain_error : public domain_error {
public:
    using domain_error::domain_error;
};

/// Adaptive quadrature ran out of node budget before two successive
/// refinements agreed.
class quadrature_error : public error {
public:
    quadrature_error(std::complex<double> last, std::complex<double> previous, std::size_t nodes)
        : error("quadrature did not converge within " + std::to_string(nodes) + " nodes"),
          last_(last), previous_(previous) {}
    std::complex<double> last_estimate() const noexcept { return last_; }
    std::complex<double> previous_estimate() const noexcept { return previous_; }

private:
    std::complex<double> last_;
    std::complex<double> previous_;
};

/// A numerically located result contradicts an independent check.
class inconsistency_error : public error {
public:
    using error::error;
};

}  // namespace lanczos
