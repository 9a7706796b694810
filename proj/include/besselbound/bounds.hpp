#pragma once

// Closed-form lower bounds for first eigenvalues, with their hypotheses.

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace besselbound {

struct GeometrySpec {
    int n = 3;
    double H0 = 1.0;              ///< mean-curvature floor of the boundary
    double K = 0.0;               ///< only K = 0 is supported
    std::optional<double> R;      ///< inner radius
};

struct CurvatureInputs {
    double min_scalar = 0.0;      ///< min of the scalar curvature
    double gamma = 0.0;           ///< curvature-operator floor
    double sigma_p = 0.0;         ///< p-curvature floor of the boundary
    int p = 1;
    double tau = 0.0;             ///< Robin parameter
    double im_lambda = 0.0;
    double nu_1p = 0.0;           ///< first Steklov eigenvalue on p-forms
    double inf_W_minus_T = 0.0;
};

struct Hypothesis {
    std::string name;
    bool satisfied;
    std::string detail;
    bool caller_asserted = false;  ///< lives on the manifold; taken on trust
};

struct BoundReport {
    std::string bound_name;
    std::optional<double> value;   ///< absent when a checkable hypothesis fails
    bool strict = false;
    bool informative = true;       ///< false for valid but vacuous bounds
    std::vector<Hypothesis> hypotheses;
    std::string equality_case;
    std::map<std::string, double> intermediates;
    std::vector<std::string> warnings;
    std::string explanation;

    bool hypotheses_hold() const;
};

/// sqrt(lambda) J_{n/2-1}(x)/J_{n/2}(x), x = sqrt(lambda)/H0: lower bound for the
/// boundary/volume integral quotient of f > 0 with Delta f <= lambda f.
/// Throws HypothesisViolated when x >= j_{n/2,1}.
BoundReport quotient_lower_bound(const GeometrySpec& geo, double lambda);

/// Vol(boundary)/Vol(M) >= n H0.
BoundReport isoperimetric_bound(const GeometrySpec& geo);

/// lambda_1 >= H0^2 j_{n/2-1,1}^2.
BoundReport dirichlet_faber_krahn(const GeometrySpec& geo);

/// lambda_1(tau) >= H0^2 tau0^2 whenever tau >= alpha H0.
BoundReport robin_threshold_bound(const GeometrySpec& geo, double tau, double tau0);

/// First Robin eigenvalue of the Euclidean ball of radius 1/H0.
BoundReport robin_ball_eigenvalue(int n, double H0, double tau);

/// Dirac: lambda^2 > n minS/(4(n-1)) + n H0^2 tau0^2/(2(n-1)).
BoundReport dirac_bound(const GeometrySpec& geo, const CurvatureInputs& cur);

/// MIT bag: |lambda|^2 >= n minS/(4(n-1)) + n H0 Im(lambda).
BoundReport mit_bound(const GeometrySpec& geo, const CurvatureInputs& cur);

/// Yamabe: mu_1 >= minS + 4(n-1)/(n-2) tau1^2 H0^2, n >= 3.
BoundReport yamabe_bound(const GeometrySpec& geo, const CurvatureInputs& cur);

/// Conformal Dirac: |lambda|^2 > n minS/(4(n-1)) + n tau1^2 H0^2/(n-2), n >= 3.
BoundReport dirac_conformal_bound(const GeometrySpec& geo, const CurvatureInputs& cur);

/// p-form Robin: lambda_{1,p} > sigma_p^2 tau0^2/(2p^2) for tau >= sigma_p(alpha/(2p) - 1).
BoundReport pform_bound(const GeometrySpec& geo, const CurvatureInputs& cur, double tau0);

/// lambda_{1,p}(tau) > lambda_1(tau, ball with H0 = sigma_p/p)/2.
BoundReport pform_ball_comparison(const GeometrySpec& geo, const CurvatureInputs& cur);

/// lambda_{1,p} - lambda_{1,p-1} >= inf(W - T)/p.
BoundReport gap_bound(const CurvatureInputs& cur);

/// Gallot-Meyer type bound; branch chosen by tau against -c/(c-1) sigma_p.
BoundReport gallot_meyer_bound(const GeometrySpec& geo, const CurvatureInputs& cur);

/// H0 = 0 case: sqrt(lambda) cot(sqrt(lambda) R) for sqrt(lambda) R < pi/2.
BoundReport cotangent_bound(double lambda, double R);

} // namespace besselbound
