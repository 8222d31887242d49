#include "lbhopf/numint.hpp"

#include <algorithm>
#include <unsupported/Eigen/MatrixFunctions>

namespace lbhopf::numint {

std::string to_string(Method m) {
    switch (m) {
    case Method::Euler: return "euler";
    case Method::RKMK4: return "rkmk4";
    case Method::CG3: return "cg3";
    case Method::CF4: return "cf4";
    }
    return "?";
}

Method parse_method(std::string_view text) {
    for (Method m : all_methods())
        if (to_string(m) == text) return m;
    throw std::invalid_argument("unknown method '" + std::string(text) + "' (expected euler, rkmk4, cg3 or cf4)");
}

int nominal_order(Method m) {
    switch (m) {
    case Method::Euler: return 1;
    case Method::RKMK4: return 4;
    case Method::CG3: return 3;
    case Method::CF4: return 4;
    }
    return 0;
}

const std::vector<Method>& all_methods() {
    static const std::vector<Method> methods{Method::Euler, Method::RKMK4, Method::CG3, Method::CF4};
    return methods;
}

double fit_slope(const std::vector<double>& h, const std::vector<double>& error) {
    if (h.size() != error.size() || h.size() < 2) throw std::invalid_argument("slope fit needs matching samples");
    double mx = 0, my = 0;
    const double n = static_cast<double>(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
        mx += std::log(h[i]);
        my += std::log(error[i]);
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const double dx = std::log(h[i]) - mx;
        sxy += dx * (std::log(error[i]) - my);
        sxx += dx * dx;
    }
    if (sxx == 0) throw std::invalid_argument("slope fit needs distinct step sizes");
    return sxy / sxx;
}

std::vector<double> geometric_steps(int lo, int hi) {
    std::vector<double> out;
    for (int k = lo; k <= hi; ++k) out.push_back(std::ldexp(1.0, -k));
    return out;
}

Vec3 rotate(const Vec3& v, const Vec3& y) {
    const double theta = v.norm();
    if (theta == 0) return y;
    return Eigen::AngleAxisd(theta, v / theta) * y;
}

namespace {

SphereProblem sphere_base(std::string name, const Vec3& y0) {
    SphereProblem p;
    p.name = std::move(name);
    p.initial = y0;
    p.act = rotate;
    // Fields y ↦ a×y and y ↦ b×y have Jacobi bracket y ↦ −(a×b)×y.
    p.bracket = [](const Vec3& a, const Vec3& b) -> Vec3 { return -a.cross(b); };
    p.distance = [](const Vec3& a, const Vec3& b) { return (a - b).norm(); };
    p.diagnostics = [](const Vec3& y0, const Vec3& y) {
        return Diagnostics{{"norm_drift", std::abs(y.norm() - y0.norm())}};
    };
    return p;
}

Eigen::VectorXd sorted_eigenvalues(const Mat& y) {
    Eigen::SelfAdjointEigenSolver<Mat> solver(y, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigenvalue computation failed");
    return solver.eigenvalues();  // ascending
}

double eigen_drift(const Eigen::VectorXd& ref, const Mat& y) {
    return (sorted_eigenvalues(y) - ref).cwiseAbs().maxCoeff();
}

}  // namespace

SphereProblem sphere_problem() {
    SphereProblem p = sphere_base("sphere", Vec3(1, 0, 0));
    p.field = [](const Vec3& y) -> Vec3 {
        return Vec3(std::cos(y(1)), 1.0 + y(0) * y(2), std::sin(y(0)) - 0.5 * y(2));
    };
    return p;
}

SphereProblem rotation_problem(const Vec3& omega, const Vec3& y0) {
    SphereProblem p = sphere_base("rotation", y0);
    p.field = [omega](const Vec3&) { return omega; };
    p.exact = [omega, y0](double t) { return rotate(t * omega, y0); };
    return p;
}

Mat expm(const Mat& v) { return v.exp(); }

Mat toda_field(const Mat& y) {
    Mat b = Mat::Zero(y.rows(), y.cols());
    for (Eigen::Index i = 0; i < y.rows(); ++i)
        for (Eigen::Index j = 0; j < y.cols(); ++j) {
            if (i < j) b(i, j) = y(i, j);
            if (i > j) b(i, j) = -y(i, j);
        }
    return b;
}

MatrixProblem isospectral_problem(const Mat& y0) {
    if (y0.rows() != y0.cols()) throw std::invalid_argument("isospectral problem needs a square matrix");
    if (!y0.isApprox(y0.transpose(), 1e-14)) throw std::invalid_argument("isospectral problem needs a symmetric matrix");
    MatrixProblem p;
    p.name = "isospectral";
    p.initial = y0;
    p.field = toda_field;
    p.act = [](const Mat& v, const Mat& y) -> Mat {
        const Mat e = expm(v);
        const Mat einv = expm(-v);
        return e * y * einv;
    };
    // ξ_V(Y) = VY − YV; the Jacobi bracket of ξ_V and ξ_W is ξ of −[V, W].
    p.bracket = [](const Mat& a, const Mat& b) -> Mat { return b * a - a * b; };
    p.distance = [](const Mat& a, const Mat& b) { return (a - b).norm(); };
    const Eigen::VectorXd ref = sorted_eigenvalues(y0);
    p.diagnostics = [ref](const Mat&, const Mat& y) { return Diagnostics{{"eigenvalue_drift", eigen_drift(ref, y)}}; };
    return p;
}

Mat default_isospectral_initial() {
    Mat y(3, 3);
    y << 1.0, 0.5, 0.2,
         0.5, -0.3, 0.7,
         0.2, 0.7, 2.0;
    return y;
}

TranslationProblem translation_problem(std::function<Vec(const Vec&)> F, const Vec& y0) {
    TranslationProblem p;
    p.name = "rn";
    p.initial = y0;
    p.field = std::move(F);
    p.act = [](const Vec& v, const Vec& y) -> Vec { return y + v; };
    p.bracket = [](const Vec& a, const Vec&) -> Vec { return Vec::Zero(a.size()); };
    p.distance = [](const Vec& a, const Vec& b) { return (a - b).norm(); };
    return p;
}

TranslationProblem default_translation_problem() {
    Vec y0(3);
    y0 << 0.5, -0.25, 1.0;
    return translation_problem(
        [](const Vec& y) -> Vec {
            Vec f(3);
            f << y(1) * y(2), -std::sin(y(0)), 0.5 * y(0) - y(2) * y(2);
            return f;
        },
        y0);
}

double isospectral_drift(const MatrixProblem& p, Method m, double h, double T) {
    const Eigen::VectorXd ref = sorted_eigenvalues(p.initial);
    if (h == 0) return eigen_drift(ref, step(p, m, p.initial, 0.0));
    double drift = 0;
    integrate(p, m, h, T, [&](const TrajectoryPoint<Mat>& pt) { drift = std::max(drift, eigen_drift(ref, pt.y)); });
    return drift;
}

double isospectral_drift_ambient_rk4(const Mat& y0, double h, double T) {
    const Eigen::VectorXd ref = sorted_eigenvalues(y0);
    auto F = [](const Mat& y) -> Mat {
        const Mat b = toda_field(y);
        return b * y - y * b;
    };
    const long n = step_count(h, T);
    Mat y = y0;
    double drift = 0;
    for (long k = 0; k < n; ++k) {
        const Mat k1 = F(y);
        const Mat k2 = F(y + 0.5 * h * k1);
        const Mat k3 = F(y + 0.5 * h * k2);
        const Mat k4 = F(y + h * k3);
        y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        // The ambient iterate drifts off the symmetric matrices too; measure
        // the symmetric part's spectrum.
        drift = std::max(drift, eigen_drift(ref, 0.5 * (y + y.transpose())));
    }
    return drift;
}

double sphere_norm_drift_per_step(const SphereProblem& p, Method m, double h, double T) {
    double worst = 0;
    double prev = p.initial.norm();
    integrate(p, m, h, T, [&](const TrajectoryPoint<Vec3>& pt) {
        const double r = pt.y.norm();
        worst = std::max(worst, std::abs(r - prev));
        prev = r;
    });
    return worst;
}

}  // namespace lbhopf::numint
