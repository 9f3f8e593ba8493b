use gaussq_core::HalfInt;

use super::{poly, series, Domain, IdentitySpec, ParamSpec};

const fn range(name: &'static str, lo: i64, max: [i64; 3]) -> ParamSpec {
    ParamSpec { name, domain: Domain::Range { lo, max } }
}

const fn order(name: &'static str, v: [i64; 3]) -> ParamSpec {
    ParamSpec { name, domain: Domain::Order(v) }
}

const fn fixed(name: &'static str, v: [i64; 3]) -> ParamSpec {
    ParamSpec { name, domain: Domain::Fixed(v) }
}

const fn list(name: &'static str, v: &'static [HalfInt]) -> ParamSpec {
    ParamSpec { name, domain: Domain::List(v) }
}

const POLY: [i64; 3] = [10, 25, 30];

const ALPHAS: &[HalfInt] = &[HalfInt::int(0), HalfInt::new(1), HalfInt::int(1), HalfInt::new(3)];
const THETA_ALPHAS: &[HalfInt] = &[HalfInt::int(0), HalfInt::new(1), HalfInt::int(1)];
const GEOM_R: &[HalfInt] = &[HalfInt::int(0), HalfInt::new(1), HalfInt::int(1), HalfInt::int(2), HalfInt::int(3)];
const SYM_GAMMAS: &[HalfInt] = &[HalfInt::new(1), HalfInt::int(1), HalfInt::int(2), HalfInt::int(3), HalfInt::new(5)];
const REC_GAMMAS: &[HalfInt] = &[HalfInt::int(-1), HalfInt::new(1), HalfInt::int(1), HalfInt::int(2), HalfInt::int(3)];
const TABLE_L: &[HalfInt] = &[HalfInt::int(1), HalfInt::int(2), HalfInt::int(3), HalfInt::int(4)];
const SMALL_INTS: &[HalfInt] = &[HalfInt::int(0), HalfInt::int(1), HalfInt::int(2), HalfInt::int(3)];

static REGISTRY: &[IdentitySpec] = &[
    IdentitySpec {
        name: "euler-1.3",
        anchor: "(1 -. x)^N = sum_l [N,l] (-x)^l q^C(l,2), [n,k] = [n]!/([k]![n-k]!)",
        covers: &["1.1", "1.2", "1.3", "1.4"],
        params: &[range("N", 0, POLY)],
        check: poly::euler,
    },
    IdentitySpec {
        name: "euler-delta-1.5/4.4",
        anchor: "sum_l [N,l] (-1)^l q^C(l,2) = delta_N0",
        covers: &["1.5", "4.1", "4.4"],
        params: &[range("N", 0, POLY)],
        check: poly::euler_delta,
    },
    IdentitySpec {
        name: "gauss-1.7",
        anchor: "s_{2m+1|0} = 0, s_{2m+2|0} = (1-q)(1-q^3)...(1-q^{2m+1})",
        covers: &["1.6", "1.7", "1.32"],
        params: &[range("N", 1, POLY)],
        check: poly::gauss,
    },
    IdentitySpec {
        name: "s-r1-1.10",
        anchor: "s_{2m+1|1} = -(1-q^{2m+1}) s_{2m|0}, s_{2m|1} = s_{2m|0}",
        covers: &["1.8", "1.9", "1.10"],
        params: &[range("N", 1, POLY)],
        check: poly::s_r1,
    },
    IdentitySpec {
        name: "main-1.12/1.16",
        anchor: "S_N(x) = sum_k [N/2,k]_{q^2} (x -. 1)^{N-2k} (q^{N-eps(N)}; q^-2)_k",
        covers: &["1.11", "1.12", "1.13", "1.14", "1.15", "1.16", "1.17", "2.2"],
        params: &[range("N", 1, POLY)],
        check: poly::main_theorem,
    },
    IdentitySpec {
        name: "x0-1.33",
        anchor: "sum_k [N/2,k]_{q^2} q^C(N-2k,2) (q^{N-eps(N)}; q^-2)_k = 1",
        covers: &["1.33"],
        params: &[range("N", 1, POLY)],
        check: poly::x_zero,
    },
    IdentitySpec {
        name: "qderiv-1.18",
        anchor: "D_q S_N = [N] S_{N-1}, D_q f = (f(qx) - f(x))/(qx - x)",
        covers: &["1.18", "1.19", "1.20", "1.21", "1.24"],
        params: &[range("N", 1, POLY)],
        check: poly::q_derivative_rule,
    },
    IdentitySpec {
        name: "factor-1.22",
        anchor: "[w,l] [l] = [w] [w-1,l-1]",
        covers: &["1.22"],
        params: &[range("w", 1, POLY)],
        check: poly::factor,
    },
    IdentitySpec {
        name: "rising-deriv-1.23",
        anchor: "D_q (x +. v)^a = [a] (x +. v)^{a-1}",
        covers: &["1.23"],
        params: &[range("N", 1, POLY)],
        check: poly::rising_derivative,
    },
    IdentitySpec {
        name: "shift-1.25",
        anchor: "[2m+3-2k] (q^{2m+3}; q^-2)_k = [2m+3] (q^{2m+1}; q^-2)_k",
        covers: &["1.25"],
        params: &[range("m", 0, POLY)],
        check: poly::shift_rule,
    },
    IdentitySpec {
        name: "base-1.26/1.27",
        anchor: "[m+1,k]_{q^2} [2m+2-2k] = [2m+2] [m,k]_{q^2}, [u]_{q^2} = [2u]/[2]",
        covers: &["1.26", "1.27"],
        params: &[range("m", 1, POLY)],
        check: poly::base_change,
    },
    IdentitySpec {
        name: "step-1.28..1.31",
        anchor: "s_{2m+2|0} = (1 - q^{2m+1}) s_{2m|0}",
        covers: &["1.28", "1.29", "1.30", "1.31"],
        params: &[range("m", 1, POLY)],
        check: poly::gauss_steps,
    },
    IdentitySpec {
        name: "pascal-2.8",
        anchor: "[N+1,r] = [N,r-1] + q^r [N,r] = q^{N+1-r} [N,r-1] + [N,r]",
        covers: &["2.3", "2.4", "2.5", "2.6", "2.7", "2.8", "2.9"],
        params: &[range("N", 0, POLY)],
        check: poly::pascal,
    },
    IdentitySpec {
        name: "recur-2.10",
        anchor: "S_{N+1}(x) = x S_N(x) - S_N(qx) = q^N x S_N(x/q) - S_N(x)",
        covers: &["2.1", "2.10"],
        params: &[range("N", 0, POLY)],
        check: poly::recurrence,
    },
    IdentitySpec {
        name: "opO-2.12/2.17",
        anchor: "O(f) = x f(x) - f(qx), O(S~_N) = S~_{N+1}",
        covers: &["2.11", "2.12", "2.13", "2.15", "2.17", "2.18", "2.21"],
        params: &[range("N", 1, POLY)],
        check: poly::operator_o,
    },
    IdentitySpec {
        name: "ecoef-2.19/2.22/2.27",
        anchor: "e_{N+1|k} = e_{N|k} + e_{N|k-1} q^{N+1-2k} (1 - q^{N+2-2k})",
        covers: &["2.14", "2.16", "2.19", "2.20", "2.22", "2.23", "2.24", "2.25", "2.26", "2.27"],
        params: &[range("N", 0, POLY)],
        check: poly::e_coefficients,
    },
    IdentitySpec {
        name: "taylor-3.3/3.6/3.7",
        anchor: "f(x) = sum_k f^(k)(a)/[k]! (x -. a)^k",
        covers: &["3.1", "3.2", "3.3", "3.4", "3.5", "3.6", "3.7"],
        params: &[range("n", 0, [8, 16, 20])],
        check: poly::taylor,
    },
    IdentitySpec {
        name: "taylor-S-3.10/3.12",
        anchor: "S_N(x) = sum_k [N,k] G_{N-k} (x -. 1)^k = sum_k [N,2k] (x -. 1)^{N-2k} (q^{2k-1}; q^-2)_k",
        covers: &["3.8", "3.9", "3.10", "3.11", "3.12"],
        params: &[range("N", 1, [10, 20, 25])],
        check: poly::taylor_s,
    },
    IdentitySpec {
        name: "bridge-3.13/3.14",
        anchor: "[N,2k] (q^{2k-1}; q^-2)_k = [m,k]_{q^2} (q^{2m+-1}; q^-2)_k",
        covers: &["3.13", "3.14"],
        params: &[range("N", 1, POLY)],
        check: poly::bridge,
    },
    IdentitySpec {
        name: "P-recur-3.17/3.18",
        anchor: "D_q P_N = [N] q^a P_{N-1}(q^{2a} x), P_{N+1} = q^a x P_N(q^{2a} x) + P_N(qx)",
        covers: &["3.16", "3.17", "3.18"],
        params: &[range("N", 1, [8, 20, 25]), list("alpha", ALPHAS)],
        check: poly::p_recurrences,
    },
    IdentitySpec {
        name: "rho-3.21",
        anchor: "D_q rho_n = [n] q^a rho_{n-1}(q^{2a} x)",
        covers: &["3.20", "3.21"],
        params: &[range("N", 1, [8, 20, 25]), list("alpha", ALPHAS)],
        check: poly::rho,
    },
    IdentitySpec {
        name: "theta-3.19",
        anchor: "P_N(x) = sum_k [N,k] rho_{N-k}(x) theta_k",
        covers: &["3.19"],
        params: &[range("N", 0, [6, 12, 12]), list("alpha", THETA_ALPHAS)],
        check: poly::theta,
    },
    IdentitySpec {
        name: "geom-4.2/4.5/4.9",
        anchor: "sum_l (q^r t)^l q^C(l,2) / (1 +. t)^{l+1} = sum_N (1 -. q^r)^N (-t)^N",
        covers: &["4.2", "4.5", "4.9"],
        params: &[order("order", [10, 25, 40]), list("r", GEOM_R)],
        check: series::geometric,
    },
    IdentitySpec {
        name: "carlitz-4.8",
        anchor: "sum_k t^k / (1 +. t)^{k+1} = 1 + sum_m (1-q)...(1-q^{2m-1}) t^{2m}",
        covers: &["4.7", "4.8"],
        params: &[order("order", [12, 30, 40])],
        check: series::carlitz,
    },
    IdentitySpec {
        name: "bivar-4.10/4.11",
        anchor: "sum_l z^l q^C(l,2) / (1 +. t)^{l+1} = sum_N (-1)^N (t -. z)^N",
        covers: &["4.10", "4.11"],
        params: &[order("order_z", [6, 12, 12]), order("order_t", [6, 12, 12])],
        check: series::bivariate,
    },
    IdentitySpec {
        name: "negbinom-4.3/4.6",
        anchor: "1 / (1 -. t)^{N+1} = sum_s [N+s,s] t^s",
        covers: &["4.3", "4.6"],
        params: &[range("N", 0, [5, 15, 15]), order("order", [15, 30, 40])],
        check: series::negative_binomial,
    },
    IdentitySpec {
        name: "sigma-5.4/5.5/5.8",
        anchor: "sigma_N = sum_l [N,l]_{q^2} q^l = (1 +. q)^N, sigma_{N+1} = (1 + q^{N+1}) sigma_N",
        covers: &["5.1", "5.2", "5.3", "5.4", "5.5", "5.6", "5.7", "5.8", "5.9"],
        params: &[range("N", 0, [10, 20, 30])],
        check: series::sigma_values,
    },
    IdentitySpec {
        name: "sigma-sym-5.10",
        anchor: "sigma_N(-gamma) = q^{-gamma N} sigma_N(gamma)",
        covers: &["5.10"],
        params: &[range("N", 0, [10, 20, 30]), list("gamma", SYM_GAMMAS)],
        check: series::sigma_symmetry,
    },
    IdentitySpec {
        name: "sigma-rec-5.11",
        anchor: "sigma_N(gamma + 2) = sigma_{N+1}(gamma) - q^gamma sigma_N(gamma)",
        covers: &["5.11"],
        params: &[range("N", 0, [10, 20, 30]), list("gamma", REC_GAMMAS)],
        check: series::sigma_recurrence,
    },
    IdentitySpec {
        name: "ccoef-5.13/5.16",
        anchor: "c_{l+1|s} = (q^s - q^{2l+1}) c_{l|s} + c_{l|s-1}, c_{l|2r} = [l-r,r]_{q^2} g_{l-r}/g_r",
        covers: &["5.12", "5.13", "5.14", "5.15", "5.16", "5.17"],
        params: &[range("l", 0, [5, 8, 10])],
        check: series::c_coefficients,
    },
    IdentitySpec {
        name: "sigma-table-5.18",
        anchor: "sigma_N(3)/sigma_N(1) = (1-q) + qQ, ...",
        covers: &["5.18"],
        params: &[list("l", TABLE_L)],
        check: series::sigma_table,
    },
    IdentitySpec {
        name: "limit-5.19/5.21",
        anchor: "sum_k q^{(2l+1)k}/(q^2;q^2)_k = (q;q^2)_l sum_k q^k/(q^2;q^2)_k",
        covers: &["5.19", "5.20", "5.21"],
        params: &[range("l", 0, [3, 8, 8]), order("order", [20, 40, 40])],
        check: series::limit,
    },
    IdentitySpec {
        name: "fine-5.22/5.23",
        anchor: "(1/(q;q^2)_inf) sum_k z^k/(q^2;q^2)_k = (1/(z;q^2)_inf) sum_k q^k/(q^2;q^2)_k",
        covers: &["5.22", "5.23", "5.24"],
        params: &[fixed("order_z", [4, 8, 8]), order("order_q", [16, 30, 40])],
        check: series::fine_functional,
    },
    IdentitySpec {
        name: "qdiff-6.4/6.5",
        anchor: "(Delta^k a)_n = sum_s b_{k+n-s} [n,s] q^{ks}",
        covers: &["6.1", "6.2", "6.3", "6.4", "6.5", "6.6"],
        params: &[range("n", 0, [8, 15, 20])],
        check: series::q_difference,
    },
    IdentitySpec {
        name: "crux-6.8/6.10/6.11",
        anchor: "a_n = [n,rho] sigma~_{n-rho}(2r+1), b_s = [s,rho] q^{(s-rho)(r+1/2)}",
        covers: &["6.7", "6.8", "6.9", "6.10", "6.11"],
        params: &[range("n", 0, [8, 15, 20]), list("r", SMALL_INTS), list("rho", SMALL_INTS)],
        check: series::crux,
    },
    IdentitySpec {
        name: "fine-v-6.14/6.15",
        anchor: "v_N = V_N(q), V_N(t) = sum_s [N+s,s] t^s q^C(s,2)",
        covers: &["6.14", "6.15"],
        params: &[range("N", 1, [5, 8, 10]), order("order", [20, 30, 30])],
        check: series::fine_v,
    },
];

pub fn registry() -> &'static [IdentitySpec] {
    REGISTRY
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::identities::{run, Overrides, Scale};

    fn in_scope() -> BTreeSet<String> {
        let spans: &[(u32, u32, u32)] = &[(1, 1, 33), (2, 1, 27), (3, 1, 14), (3, 16, 21), (4, 1, 11), (5, 1, 24), (6, 1, 11), (6, 14, 15)];
        spans.iter().flat_map(|&(sec, lo, hi)| (lo..=hi).map(move |i| format!("{sec}.{i}"))).collect()
    }

    #[test]
    fn every_in_scope_identity_is_covered() {
        let covered: BTreeSet<String> = registry().iter().flat_map(|s| s.covers.iter().map(|c| c.to_string())).collect();
        let missing: Vec<_> = in_scope().difference(&covered).cloned().collect();
        assert!(missing.is_empty(), "uncovered: {missing:?}");
        let extra: Vec<_> = covered.difference(&in_scope()).cloned().collect();
        assert!(extra.is_empty(), "out of scope: {extra:?}");
    }

    #[test]
    fn names_are_unique_and_listed() {
        let names: BTreeSet<_> = registry().iter().map(|s| s.name).collect();
        assert_eq!(names.len(), registry().len());
        assert_eq!(registry().len(), 36);
    }

    #[test]
    fn runs_are_deterministic() {
        let ov = Overrides { n_max: Some(4), ..Default::default() };
        let strip = |name| {
            run(name, Scale::Small, &ov)
                .unwrap()
                .into_iter()
                .map(|r| (r.key(), r.status, r.witness, r.note))
                .collect::<Vec<_>>()
        };
        for name in ["gauss-1.7", "crux-6.8/6.10/6.11", "theta-3.19"] {
            assert_eq!(strip(name), strip(name));
        }
    }
}
