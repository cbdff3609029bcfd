// Copyright 2026 The fluxlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FLUXLAB_SRC_LEAST_SQUARES_H
#define FLUXLAB_SRC_LEAST_SQUARES_H

#include <functional>

#include <Eigen/Dense>
#include <unsupported/Eigen/NonLinearOptimization>
#include <unsupported/Eigen/NumericalDiff>

namespace fluxlab::detail {

using ResidualFn = std::function<void(const Eigen::VectorXd &params, Eigen::VectorXd &residuals)>;

struct LeastSquaresResult {
    Eigen::VectorXd params;
    double rms = 0.0;
    bool converged = false;
};

// Adapts a std::function residual to the functor shape Eigen's
// Levenberg-Marquardt expects.
struct ResidualFunctor {
    using Scalar = double;
    using InputType = Eigen::VectorXd;
    using ValueType = Eigen::VectorXd;
    using JacobianType = Eigen::MatrixXd;
    enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };

    ResidualFn fn;
    int n_inputs;
    int n_values;

    int inputs() const {
        return n_inputs;
    }
    int values() const {
        return n_values;
    }
    int operator()(const Eigen::VectorXd &x, Eigen::VectorXd &fvec) const {
        fn(x, fvec);
        return 0;
    }
};

inline LeastSquaresResult minimize(const ResidualFn &fn, Eigen::VectorXd x0, int n_residuals, int max_evals = 4000) {
    ResidualFunctor functor{fn, static_cast<int>(x0.size()), n_residuals};
    Eigen::NumericalDiff<ResidualFunctor, Eigen::Central> numeric(functor);
    Eigen::LevenbergMarquardt<Eigen::NumericalDiff<ResidualFunctor, Eigen::Central>> lm(numeric);
    lm.parameters.maxfev = max_evals;
    lm.parameters.xtol = 1e-14;
    lm.parameters.ftol = 1e-14;
    auto status = lm.minimize(x0);

    LeastSquaresResult out;
    out.params = x0;
    Eigen::VectorXd r(n_residuals);
    fn(x0, r);
    out.rms = std::sqrt(r.squaredNorm() / n_residuals);
    out.converged = status != Eigen::LevenbergMarquardtSpace::ImproperInputParameters &&
                    status != Eigen::LevenbergMarquardtSpace::TooManyFunctionEvaluation &&
                    r.allFinite();
    return out;
}

}  // namespace fluxlab::detail

#endif  // FLUXLAB_SRC_LEAST_SQUARES_H
