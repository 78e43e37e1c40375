// Copyright 2026 The zzsim Authors
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

#include <cmath>

#include "zzsim/errors.h"
#include "zzsim/linalg.h"
#include "zzsim/verifier.h"

namespace zzsim {

namespace {

double local_field_error(const LocalFields &got, const LocalFields &want, int n) {
    double m = 0;
    for (int q = 0; q < n; q++) {
        Vec3 a = got.empty() ? Vec3{} : got[q];
        Vec3 b = want.empty() ? Vec3{} : want[q];
        for (int i = 0; i < 3; i++) {
            m = std::max(m, std::abs(a[i] - b[i]));
        }
    }
    return m;
}

// Ensemble of Bloch vectors R_k e_z (and antipodes) read off the frames of
// each interval; its correlations equal avg / mu + I for the complete unit drift.
ProductEnsemble frame_ensemble(const ConjugationSchedule &s) {
    ProductEnsemble e{s.n, {}};
    const double mu = s.overhead();
    for (const auto &iv : s.intervals) {
        ProductTerm up{iv.duration / (2 * mu), {}};
        ProductTerm down{iv.duration / (2 * mu), {}};
        for (const auto &u : iv.frame.u) {
            Vec3 b = adjoint_rotation(u).column(2);
            up.bloch.push_back(b);
            down.bloch.push_back({-b[0], -b[1], -b[2]});
        }
        e.terms.push_back(std::move(up));
        e.terms.push_back(std::move(down));
    }
    return e;
}

}  // namespace

CorrelationCertificate correlation_certificate(const SignSchedule &s, const WeightedGraph &target, double tol) {
    validate(s);
    validate(target);
    if (s.n != target.n) {
        throw ValidationError("correlation_certificate: qubit count mismatch");
    }
    CorrelationCertificate out;
    out.mu = s.overhead();
    if (!(out.mu > 0)) {
        throw ValidationError("correlation_certificate: schedule has zero overhead");
    }
    out.ensemble.n = s.n;
    for (const auto &iv : s.intervals) {
        ProductTerm up{iv.duration / (2 * out.mu), {}};
        ProductTerm down{iv.duration / (2 * out.mu), {}};
        for (int8_t sign : iv.signs) {
            up.bloch.push_back({0, 0, static_cast<double>(sign)});
            down.bloch.push_back({0, 0, -static_cast<double>(sign)});
        }
        out.ensemble.terms.push_back(std::move(up));
        out.ensemble.terms.push_back(std::move(down));
    }
    out.correlations = out.ensemble.correlations();

    Matrix expected = graph_to_jmatrix(target).dense() * (1 / out.mu) + Matrix::identity(3 * s.n);
    out.max_error = max_abs_diff(out.correlations.values, expected);
    out.psd_ok = is_psd(out.correlations.values, tol);
    return out;
}

VerificationReport verify(const SignSchedule &s, const WeightedGraph &target, const VerifyOptions &opts) {
    validate(target);
    WeightedGraph drift = WeightedGraph::complete(target.n);
    VerificationReport r;
    JMatrix avg = average_hamiltonian(s, drift);
    r.avg_hamiltonian_error = max_abs_diff(avg, graph_to_jmatrix(target));
    r.mu = s.overhead();
    if (r.mu > 0) {
        r.psd_ok = correlation_certificate(s, target, opts.tol).psd_ok;
    } else {
        r.psd_ok = target.max_abs_weight() == 0;
    }
    if (opts.epsilon && s.n <= opts.caps.diagonal) {
        double eps = *opts.epsilon;
        double halves[] = {eps, eps / 2};
        TrotterScaling t = trotter_scaling(s, drift, target, halves, opts.caps);
        r.unitary_error = t.errors[0];
        if (!std::isnan(t.ratios[0])) {
            r.trotter_ratio = t.ratios[0];
        }
    }
    double scale = std::max(1.0, target.max_abs_weight());
    r.mismatch = r.avg_hamiltonian_error > opts.tol * scale || !r.psd_ok;
    return r;
}

VerificationReport verify(const ConjugationSchedule &s, const JMatrix &drift, const JMatrix &target,
                          const LocalFields &target_fields, const VerifyOptions &opts) {
    validate(target);
    VerificationReport r;
    JMatrix avg = average_hamiltonian(s, drift);
    r.avg_hamiltonian_error =
        std::max(max_abs_diff(avg, target), local_field_error(s.local_fields, target_fields, s.n));
    r.mu = s.overhead();
    if (r.mu > 0) {
        r.psd_ok = is_psd(frame_ensemble(s).correlations().values, opts.tol);
    } else {
        r.psd_ok = true;
    }
    if (opts.epsilon && s.n <= opts.caps.general) {
        double eps = *opts.epsilon;
        double e1 = operator_distance(schedule_unitary(s, drift, eps, opts.trotter_steps, opts.caps),
                                      unitary_of(target, eps, target_fields, opts.caps));
        double e2 = operator_distance(schedule_unitary(s, drift, eps / 2, opts.trotter_steps, opts.caps),
                                      unitary_of(target, eps / 2, target_fields, opts.caps));
        r.unitary_error = e1;
        if (e1 > 1e-12 || e2 > 1e-12) {
            r.trotter_ratio = e1 / std::max(e2, 1e-300);
        }
    }
    r.mismatch = r.avg_hamiltonian_error > opts.tol * std::max(1.0, max_abs(target.dense())) || !r.psd_ok;
    return r;
}

}  // namespace zzsim
