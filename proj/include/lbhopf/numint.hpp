#ifndef LBHOPF_NUMINT_HPP
#define LBHOPF_NUMINT_HPP

#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace lbhopf::numint {

using Diagnostics = std::map<std::string, double>;

// y′ = f(y)·y on a manifold acted on by a Lie algebra g of frozen fields.
// act(v, y) is the exact flow exp(v)·y. bracket is the Jacobi bracket of the
// generated vector fields, which for a left matrix action is the negated
// matrix commutator.
template <class State, class Alg>
struct ActionProblem {
    std::string name;
    State initial;
    std::function<Alg(const State&)> field;
    std::function<State(const Alg&, const State&)> act;
    std::function<Alg(const Alg&, const Alg&)> bracket;
    std::function<double(const State&, const State&)> distance;
    // Invariant measurements of y relative to the initial value y0.
    std::function<Diagnostics(const State& y0, const State& y)> diagnostics;
    // Closed-form solution when one is known.
    std::function<State(double t)> exact;
};

template <class State>
struct StepResult {
    State y;
    Diagnostics diagnostics;
};

enum class Method { Euler, RKMK4, CG3, CF4 };

std::string to_string(Method m);
Method parse_method(std::string_view text);
int nominal_order(Method m);
const std::vector<Method>& all_methods();

class NonFiniteState : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BelowNoiseFloor : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

template <class State>
void check_finite(const State& y, const char* where) {
    if (!y.allFinite()) throw NonFiniteState(std::string("non-finite state in ") + where);
}

}  // namespace detail

// Products of exponentials are written in the order they act: the leftmost
// factor of exp(A)·exp(B)·y is applied first, so the code reads
// act(B, act(A, y)).

// y₁ = exp(h f(y₀))·y₀.
template <class State, class Alg>
State exp_euler_step(const ActionProblem<State, Alg>& p, const State& y0, double h) {
    detail::check_finite(y0, "exponential Euler");
    State y1 = p.act(h * p.field(y0), y0);
    detail::check_finite(y1, "exponential Euler");
    return y1;
}

// Fourth order Runge–Kutta–Munthe-Kaas.
template <class State, class Alg>
State rkmk4_step(const ActionProblem<State, Alg>& p, const State& y0, double h) {
    detail::check_finite(y0, "RKMK4");
    const Alg f1 = h * p.field(y0);
    const Alg f2 = h * p.field(p.act(0.5 * f1, y0));
    const Alg f3 = h * p.field(p.act(0.5 * f2 + (1.0 / 24.0) * p.bracket(f1, f2), y0));
    const Alg f4 = h * p.field(p.act(f3 + (1.0 / 6.0) * p.bracket(f1, f3), y0));
    const Alg v = (1.0 / 6.0) * f1 + (1.0 / 3.0) * (f2 + f3) + (1.0 / 6.0) * f4;
    const Alg i = (1.0 / 8.0) * f1 + (1.0 / 12.0) * (f2 + f3) - (1.0 / 24.0) * f4;
    State y1 = p.act(v + p.bracket(i, v), y0);
    detail::check_finite(y1, "RKMK4");
    return y1;
}

// Third order Crouch–Grossman with the classical tableau
// c = (0, 3/4, 17/24), a₃₁ = 119/216, a₃₂ = 17/108, b = (13/51, −2/3, 24/17).
template <class State, class Alg>
State cg3_step(const ActionProblem<State, Alg>& p, const State& y0, double h) {
    detail::check_finite(y0, "CG3");
    const Alg f1 = h * p.field(y0);
    const Alg f2 = h * p.field(p.act((3.0 / 4.0) * f1, y0));
    const Alg f3 = h * p.field(p.act((17.0 / 108.0) * f2, p.act((119.0 / 216.0) * f1, y0)));
    State y1 = p.act((24.0 / 17.0) * f3, p.act((-2.0 / 3.0) * f2, p.act((13.0 / 51.0) * f1, y0)));
    detail::check_finite(y1, "CG3");
    return y1;
}

// Fourth order commutator-free method.
template <class State, class Alg>
State cf4_step(const ActionProblem<State, Alg>& p, const State& y0, double h) {
    detail::check_finite(y0, "CF4");
    const Alg f1 = h * p.field(y0);
    const State y2 = p.act(0.5 * f1, y0);
    const Alg f2 = h * p.field(y2);
    const Alg f3 = h * p.field(p.act(0.5 * f2, y0));
    const Alg f4 = h * p.field(p.act(-0.5 * f1 + f3, y2));
    const Alg first = 0.25 * f1 + (1.0 / 6.0) * (f2 + f3) - (1.0 / 12.0) * f4;
    const Alg second = (-1.0 / 12.0) * f1 + (1.0 / 6.0) * (f2 + f3) + 0.25 * f4;
    State y1 = p.act(second, p.act(first, y0));
    detail::check_finite(y1, "CF4");
    return y1;
}

template <class State, class Alg>
State step(const ActionProblem<State, Alg>& p, Method m, const State& y0, double h) {
    if (!std::isfinite(h)) throw std::invalid_argument("step size must be finite");
    switch (m) {
    case Method::Euler: return exp_euler_step(p, y0, h);
    case Method::RKMK4: return rkmk4_step(p, y0, h);
    case Method::CG3: return cg3_step(p, y0, h);
    case Method::CF4: return cf4_step(p, y0, h);
    }
    throw std::logic_error("bad method");
}

template <class State, class Alg>
StepResult<State> step_with_diagnostics(const ActionProblem<State, Alg>& p, Method m, const State& y0, double h) {
    StepResult<State> r{step(p, m, y0, h), {}};
    if (p.diagnostics) r.diagnostics = p.diagnostics(y0, r.y);
    for (const auto& [name, v] : r.diagnostics)
        if (!std::isfinite(v)) throw NonFiniteState("non-finite diagnostic '" + name + "'");
    return r;
}

template <class State>
struct TrajectoryPoint {
    double t;
    State y;
    Diagnostics diagnostics;
};

// Number of steps of size h covering [0, T]; T must be a whole multiple of h
// up to rounding.
inline long step_count(double h, double T) {
    if (!(h > 0) || !std::isfinite(h)) throw std::invalid_argument("step size must be positive and finite");
    if (!(T >= 0) || !std::isfinite(T)) throw std::invalid_argument("end time must be non-negative and finite");
    const double n = std::round(T / h);
    if (std::abs(n * h - T) > 1e-9 * std::max(1.0, T))
        throw std::invalid_argument("end time is not a whole number of steps");
    return static_cast<long>(n);
}

// Fixed-step integration from the problem's initial value. The callback sees
// every point including t = 0; diagnostics are relative to the initial value.
template <class State, class Alg, class Visit>
State integrate(const ActionProblem<State, Alg>& p, Method m, double h, double T, Visit&& visit) {
    const long n = step_count(h, T);
    State y = p.initial;
    visit(TrajectoryPoint<State>{0.0, y, p.diagnostics ? p.diagnostics(p.initial, y) : Diagnostics{}});
    for (long k = 1; k <= n; ++k) {
        y = step(p, m, y, h);
        visit(TrajectoryPoint<State>{static_cast<double>(k) * h, y,
                                     p.diagnostics ? p.diagnostics(p.initial, y) : Diagnostics{}});
    }
    return y;
}

template <class State, class Alg>
State integrate(const ActionProblem<State, Alg>& p, Method m, double h, double T) {
    return integrate(p, m, h, T, [](const TrajectoryPoint<State>&) {});
}

struct ConvergenceResult {
    Method method;
    std::vector<double> h;
    std::vector<double> error;
    double slope;
};

// Least-squares slope of log(error) against log(h).
double fit_slope(const std::vector<double>& h, const std::vector<double>& error);

// Errors at T against the closed-form solution when available, otherwise
// against RKMK4 with step h_min/100. Throws BelowNoiseFloor when any error
// is at or below noise_floor, since the fitted slope would be meaningless.
template <class State, class Alg>
ConvergenceResult convergence_order(const ActionProblem<State, Alg>& p, Method m, const std::vector<double>& hs,
                                    double T, double noise_floor = 1e-13) {
    if (hs.size() < 3) throw std::invalid_argument("need at least three step sizes");
    double h_min = hs.front();
    for (double h : hs) h_min = std::min(h_min, h);
    State reference = p.exact ? p.exact(T) : integrate(p, Method::RKMK4, h_min / 100.0, T);
    ConvergenceResult r{m, hs, {}, 0.0};
    for (double h : hs) {
        const double e = p.distance(integrate(p, m, h, T), reference);
        if (!(e > noise_floor))
            throw BelowNoiseFloor("error " + std::to_string(e) + " at h=" + std::to_string(h) +
                                  " is below the noise floor; slope not defined");
        r.error.push_back(e);
    }
    r.slope = fit_slope(hs, r.error);
    return r;
}

// h = 2^-lo, ..., 2^-hi.
std::vector<double> geometric_steps(int lo, int hi);

using Vec3 = Eigen::Vector3d;
using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

// S² under SO(3) rotations. g = so(3) in vector form, v ↦ v × (·).
using SphereProblem = ActionProblem<Vec3, Vec3>;
// Rodrigues rotation of y about v by |v|.
Vec3 rotate(const Vec3& v, const Vec3& y);
// f(y) = w(y) with w(y) = (cos y₂, 1 + y₁y₃, sin y₁ − y₃/2), started at
// y₀ = (1, 0, 0).
SphereProblem sphere_problem();
// Constant field f ≡ omega; the exact solution is a rotation.
SphereProblem rotation_problem(const Vec3& omega, const Vec3& y0);

// Adjoint action Y ↦ e^V Y e^{−V} on symmetric matrices with the Toda field
// B(Y) = (strict upper part of Y) − (strict lower part of Y).
using MatrixProblem = ActionProblem<Mat, Mat>;
MatrixProblem isospectral_problem(const Mat& y0);
// A fixed symmetric 3×3 initial value.
Mat default_isospectral_initial();
Mat toda_field(const Mat& y);
// Matrix exponential by scaling and squaring with a Padé approximant.
Mat expm(const Mat& v);

// ℝⁿ acting on itself by translation; every bracket vanishes.
using TranslationProblem = ActionProblem<Vec, Vec>;
TranslationProblem translation_problem(std::function<Vec(const Vec&)> F, const Vec& y0);
// A fixed nonlinear field on ℝ³ for the commutative reduction checks.
TranslationProblem default_translation_problem();

// Max over the trajectory of the largest sorted-eigenvalue deviation from t = 0.
double isospectral_drift(const MatrixProblem& p, Method m, double h, double T);
// The same measurement for classical RK4 applied to Y′ = [B(Y), Y] in the
// ambient matrix space.
double isospectral_drift_ambient_rk4(const Mat& y0, double h, double T);

// Largest | |y_k| − |y_{k−1}| | over all steps.
double sphere_norm_drift_per_step(const SphereProblem& p, Method m, double h, double T);

}  // namespace lbhopf::numint

#endif
