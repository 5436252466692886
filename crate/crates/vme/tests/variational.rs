use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use vme::ansatz::{amplitudes, multiplier_as_complex, HypersphericalAngles, MultiplierVector, Purity};
use vme::error::Error;
use vme::experiments::{h_one_qubit, Model, ModelSpec};
use vme::linalg::{dot, Mat};
use vme::pauli_algebra::{to_dense, DenseHermitian};
use vme::variational_core::{
    energy, exact_multiplier, exact_multiplier_unnormalized, functional_gradient, functional_gradient_unnormalized, functional_value, functional_value_unnormalized, h_mod, iterative_multiplier, lambda_ij, m_functional, m_functional_unnormalized, rayleigh, IterativeMethod,
    MultiplierSet, Nu, Overlaps, Part, ProblemInstance, Side, LAMBDA,
};

const S: f64 = std::f64::consts::FRAC_1_SQRT_2;
const PLUS: [f64; 2] = [S, S];
const MINUS: [f64; 2] = [S, -S];

fn setup(spec: ModelSpec, part: Part) -> (Model, ProblemInstance) {
    let m = Model::resolve(&spec).unwrap();
    let p = m.problem(part).unwrap();
    (m, p)
}

fn cplx(v: &[f64]) -> Vec<Complex64> {
    v.iter().map(|x| Complex64::new(*x, 0.0)).collect()
}

fn apply(m: &DenseHermitian, v: &[Complex64]) -> Vec<Complex64> {
    (0..m.dim()).map(|r| (0..m.dim()).map(|c| m.get(r, c) * v[c]).sum()).collect()
}

/// `H − H|φ⟩⟨φ|H/E − E`, built from the dense Hamiltonian.
fn shifted_oracle(h: &DenseHermitian, phi: &[f64]) -> DenseHermitian {
    let hp = apply(h, &cplx(phi));
    let e: f64 = hp.iter().zip(phi).map(|(a, b)| a.re * b).sum();
    DenseHermitian::from_fn(h.dim(), |r, c| h.get(r, c) - hp[r] * hp[c] / e - if r == c { Complex64::new(e, 0.0) } else { Complex64::new(0.0, 0.0) })
}

fn max_norm(v: &[Complex64]) -> f64 {
    v.iter().fold(0.0, |m, z| m.max(z.norm()))
}

fn random_state(rng: &mut ChaCha8Rng, n_angles: usize) -> HypersphericalAngles {
    HypersphericalAngles::new((0..n_angles).map(|_| rng.random_range(-3.0..3.0)).collect()).unwrap()
}

#[test]
fn energies_of_reference_states() {
    let x = Mat::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]);
    assert!((energy(&PLUS, &x).unwrap() - 1.0).abs() < 1e-15);
    assert_eq!(energy(&[1.0, 0.0], &x).unwrap(), 0.0);
    assert!(matches!(energy(&[1.0, 1.0], &x), Err(Error::NormViolation(_))));
}

#[test]
fn two_qubit_energy_matches_dense_sandwich() {
    let (model, p) = setup(ModelSpec::TwoQubit, Part::Real);
    let h = to_dense(&model.hamiltonian);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..20 {
        let phi = amplitudes(&random_state(&mut rng, 3));
        let want = h.sandwich(&cplx(&phi), &cplx(&phi)).re;
        assert!((energy(&phi, p.h()).unwrap() - want).abs() < 1e-12);
    }
}

#[test]
fn h_mod_for_x_at_plus() {
    let x = Mat::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]);
    let (m, e) = h_mod(&x, &PLUS).unwrap();
    assert!((e - 1.0).abs() < 1e-15);
    let shifted = m.sub_scaled_identity(e);
    let want = [[-1.5, 0.5], [0.5, -1.5]];
    for r in 0..2 {
        for c in 0..2 {
            assert!((shifted[(r, c)] - want[r][c]).abs() < 1e-15);
        }
    }
    // eigenvalues −1 and −2 along |+⟩ and |−⟩
    let hp = shifted.mul_vec(&PLUS);
    let hm = shifted.mul_vec(&MINUS);
    assert!((hp[0] + PLUS[0]).abs() < 1e-15 && (hm[0] + 2.0 * MINUS[0]).abs() < 1e-15);
    assert!(matches!(h_mod(&x, &[1.0, 0.0]), Err(Error::NearZeroEnergy(_))));
}

#[test]
fn h_mod_annihilates_eigenstates() {
    let model = Model::resolve(&ModelSpec::TwoQubit).unwrap();
    let h = Mat::from_fn(4, |r, c| to_dense(&model.hamiltonian).get(r, c).re);
    for state in &model.eigenstates {
        let (m, _) = h_mod(&h, state).unwrap();
        assert!(m.mul_vec(state).iter().all(|x| x.abs() < 1e-12));
    }
}

/// `(H_mod − E_i) L_{i,b} = −W φ_j / 2` and `(H_mod − E_j) L_{j,b} = −W* φ_i / 2`
/// as complex vectors, with `L_a = ±L_b`.
#[test]
fn exact_multipliers_satisfy_the_complex_linear_systems() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for spec in [ModelSpec::OneQubit, ModelSpec::TwoQubit] {
        for part in [Part::Real, Part::Imaginary] {
            let (model, p) = setup(spec.clone(), part);
            let h = to_dense(&model.hamiltonian);
            let (wr, wi) = vme::pauli_algebra::hermitian_split(&model.w).unwrap();
            let w = if part == Part::Real { wr } else { wi };
            let w_conj = DenseHermitian::from_fn(w.dim(), |r, c| w.get(r, c).conj());
            let mut checked = 0;
            while checked < 25 {
                let pi = amplitudes(&random_state(&mut rng, model.dim() - 1));
                let pj = amplitudes(&random_state(&mut rng, model.dim() - 1));
                let Ok(ls) = MultiplierSet::exact(&p, &pi, &pj) else { continue };
                for (side, l, phi, rhs) in [(Side::I, &ls.l_ib, &pi, apply(&w, &cplx(&pj))), (Side::J, &ls.l_jb, &pj, apply(&w_conj, &cplx(&pi)))] {
                    let lhs = apply(&shifted_oracle(&h, phi), &multiplier_as_complex(l));
                    let res: Vec<Complex64> = lhs.iter().zip(&rhs).map(|(a, b)| a + b * 0.5).collect();
                    assert!(max_norm(&res) < 1e-10, "{spec:?} {part:?} {side:?}: {}", max_norm(&res));
                }
                assert!(ls.symmetry_holds(part));
                checked += 1;
            }
        }
    }
}

#[test]
fn zero_observable_gives_zero_multipliers() {
    let p = ProblemInstance::new(h_one_qubit(), DenseHermitian::zeros(2), Part::Real).unwrap();
    for side in [Side::I, Side::J] {
        let l = exact_multiplier(&p, &MINUS, &PLUS, side, Nu::A).unwrap();
        assert!(l.coeffs.iter().all(|x| *x == 0.0));
    }
}

#[test]
fn imaginary_a_and_b_multipliers_are_opposite() {
    let (_, p) = setup(ModelSpec::OneQubit, Part::Imaginary);
    let phi_i = amplitudes(&HypersphericalAngles::new(vec![0.3]).unwrap());
    for side in [Side::I, Side::J] {
        let a = exact_multiplier(&p, &phi_i, &PLUS, side, Nu::A).unwrap();
        let b = exact_multiplier(&p, &phi_i, &PLUS, side, Nu::B).unwrap();
        assert_eq!(a.purity, Purity::Imaginary);
        assert_eq!(a, b.negated());
    }
}

fn scaled(l: &MultiplierVector, s: f64) -> MultiplierVector {
    MultiplierVector { coeffs: l.coeffs.iter().map(|x| s * x).collect(), purity: l.purity }
}

#[test]
fn m_functional_is_minimal_at_the_exact_multiplier_for_the_ground_state() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for spec in [ModelSpec::OneQubit, ModelSpec::TwoQubit] {
        for part in [Part::Real, Part::Imaginary] {
            let (model, p) = setup(spec.clone(), part);
            let ground = &model.eigenstates[0];
            let other = &model.eigenstates[1];
            for (side, pi, pj) in [(Side::I, ground, other), (Side::J, other, ground)] {
                let l = exact_multiplier(&p, pi, pj, side, Nu::B).unwrap();
                let m0 = m_functional(&l, &p, pi, pj, side).unwrap();
                for _ in 0..100 {
                    let d: Vec<f64> = l.coeffs.iter().map(|x| x + rng.random_range(-0.5..0.5)).collect();
                    let m = m_functional(&MultiplierVector { coeffs: d, purity: l.purity }, &p, pi, pj, side).unwrap();
                    assert!(m >= m0);
                }
            }
        }
    }
}

#[test]
fn m_functional_structure() {
    let (model, p) = setup(ModelSpec::TwoQubit, Part::Real);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let h = to_dense(&model.hamiltonian);
    for _ in 0..20 {
        let pi = amplitudes(&random_state(&mut rng, 3));
        let pj = amplitudes(&random_state(&mut rng, 3));
        let l = MultiplierVector { coeffs: (0..4).map(|_| rng.random_range(-1.0..1.0)).collect(), purity: Purity::Real };
        let Ok(m1) = m_functional(&l, &p, &pi, &pj, Side::I) else { continue };
        let m2 = m_functional(&scaled(&l, 2.0), &p, &pi, &pj, Side::I).unwrap();
        let quad = shifted_oracle(&h, &pi).sandwich(&cplx(&l.coeffs), &cplx(&l.coeffs)).re;
        assert!((m2 - 2.0 * m1 - 2.0 * quad).abs() < 1e-10);
        assert_eq!(m_functional(&MultiplierVector::zeros(4, Purity::Real), &p, &pi, &pj, Side::I).unwrap(), 0.0);
    }
}

#[test]
fn iterative_multipliers() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for part in [Part::Real, Part::Imaginary] {
        let (model, p) = setup(ModelSpec::OneQubit, part);
        for _ in 0..50 {
            let pi = amplitudes(&random_state(&mut rng, 1));
            let pj = amplitudes(&random_state(&mut rng, 1));
            let (Ok(ex), Ok(it)) = (MultiplierSet::exact(&p, &pi, &pj), MultiplierSet::iterative(&p, &pi, &pj, &IterativeMethod::StationarySolve)) else { continue };
            assert!(it.symmetry_holds(part));
            for (a, b) in [(&ex.l_ia, &it.l_ia), (&ex.l_ib, &it.l_ib), (&ex.l_ja, &it.l_ja), (&ex.l_jb, &it.l_jb)] {
                for (x, y) in a.coeffs.iter().zip(&b.coeffs) {
                    assert!((x - y).abs() < 1e-10);
                }
            }
        }
        let ground = &model.eigenstates[0];
        let other = &model.eigenstates[1];
        let frozen = IterativeMethod::Descent { steps: 100, rate: 0.0, tolerance: None };
        assert!(iterative_multiplier(&p, ground, other, Side::I, Nu::B, &frozen).unwrap().coeffs.iter().all(|x| *x == 0.0));
        let descent = IterativeMethod::Descent { steps: 500, rate: 0.1, tolerance: None };
        let got = iterative_multiplier(&p, ground, other, Side::I, Nu::B, &descent).unwrap();
        let want = exact_multiplier(&p, ground, other, Side::I, Nu::B).unwrap();
        let err: f64 = got.coeffs.iter().zip(&want.coeffs).map(|(a, b)| (a - b).powi(2)).sum::<f64>().sqrt();
        assert!(err < 1e-4, "{part:?}: {err}");
    }
}

#[test]
fn descent_with_unmet_tolerance_reports_max_iterations() {
    let (model, p) = setup(ModelSpec::OneQubit, Part::Real);
    let short = IterativeMethod::Descent { steps: 2, rate: 0.01, tolerance: Some(1e-12) };
    let r = iterative_multiplier(&p, &model.eigenstates[0], &model.eigenstates[1], Side::I, Nu::B, &short);
    assert_eq!(r, Err(Error::MaxIterations(2)));
}

#[test]
fn oracle_values_at_exact_eigenstates() {
    for spec in [ModelSpec::OneQubit, ModelSpec::TwoQubit] {
        for part in [Part::Real, Part::Imaginary] {
            let (model, p) = setup(spec.clone(), part);
            for a in 0..model.dim() {
                for b in 0..model.dim() {
                    let (pi, pj) = (&model.eigenstates[a], &model.eigenstates[b]);
                    let ls = MultiplierSet::exact(&p, pi, pj).unwrap();
                    let f = functional_value(&p, pi, pj, &ls, model.energies[a], model.energies[b]).unwrap();
                    let z = model.w_diag.get(a, b);
                    let want = if part == Part::Real { z.re } else { z.im };
                    assert!((f - want).abs() < 1e-9, "{spec:?} {part:?} ({a},{b}): {f} vs {want}");
                }
            }
        }
    }
    // one-qubit values in the ascending-energy order (|−⟩, |+⟩)
    let (model, _) = setup(ModelSpec::OneQubit, Part::Real);
    assert!((model.w_diag.get(0, 0).re - 3.0).abs() < 1e-12);
    assert!((model.w_diag.get(1, 1).re - 5.0).abs() < 1e-12);
    assert!((model.w_diag.get(0, 1).re - 2.0).abs() < 1e-12);
}

#[test]
fn zero_multipliers_leave_the_direct_sandwich() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for part in [Part::Real, Part::Imaginary] {
        let (model, p) = setup(ModelSpec::TwoQubit, part);
        let (wr, wi) = vme::pauli_algebra::hermitian_split(&model.w).unwrap();
        let w = if part == Part::Real { wr } else { wi };
        for _ in 0..20 {
            let pi = amplitudes(&random_state(&mut rng, 3));
            let pj = amplitudes(&random_state(&mut rng, 3));
            let f = functional_value(&p, &pi, &pj, &MultiplierSet::zeros(part, 4), 0.7, -0.3).unwrap();
            let z = w.sandwich(&cplx(&pi), &cplx(&pj));
            let zt = w.sandwich(&cplx(&pj), &cplx(&pi));
            let want = match part {
                Part::Real => z.re + LAMBDA * (z.re - zt.re),
                Part::Imaginary => z.im + LAMBDA * (z.im + zt.im),
            };
            assert!((f - want).abs() < 1e-12);
            assert!((f - if part == Part::Real { z.re } else { z.im }).abs() < 1e-12);
        }
    }
}

#[test]
fn gradient_vanishes_at_exact_eigenstates() {
    for spec in [ModelSpec::OneQubit, ModelSpec::TwoQubit] {
        for part in [Part::Real, Part::Imaginary] {
            let (model, p) = setup(spec.clone(), part);
            let angles = model.optimal_angles().unwrap();
            for a in 0..model.dim() {
                for b in 0..model.dim() {
                    let (pi, pj) = (amplitudes(&angles[a]), amplitudes(&angles[b]));
                    let ls = MultiplierSet::exact(&p, &pi, &pj).unwrap();
                    let g = functional_gradient(&p, &angles[a], &angles[b], &ls).unwrap();
                    assert!(dot(&g, &g).sqrt() < 1e-8, "{spec:?} {part:?} ({a},{b})");
                }
            }
        }
    }
}

#[test]
fn gradient_is_symmetric_for_identity_observable_and_equal_states() {
    for spec in [ModelSpec::OneQubit, ModelSpec::TwoQubit] {
        let model = Model::resolve(&spec).unwrap();
        let d = model.dim();
        let p = ProblemInstance::new(model.hamiltonian.clone(), DenseHermitian::identity(d), Part::Real).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..20 {
            let a = random_state(&mut rng, d - 1);
            let phi = amplitudes(&a);
            let Ok(ls) = MultiplierSet::exact(&p, &phi, &phi) else { continue };
            let g = functional_gradient(&p, &a, &a, &ls).unwrap();
            let (gi, gj) = g.split_at(d - 1);
            for (x, y) in gi.iter().zip(gj) {
                assert!((x - y).abs() < 1e-10);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn gradient_matches_finite_differences(seed in any::<u64>(), two in any::<bool>(), imag in any::<bool>()) {
        let spec = if two { ModelSpec::TwoQubit } else { ModelSpec::OneQubit };
        let part = if imag { Part::Imaginary } else { Part::Real };
        let (model, p) = setup(spec, part);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let na = model.dim() - 1;
        let (ai, aj) = (random_state(&mut rng, na), random_state(&mut rng, na));
        let (pi, pj) = (amplitudes(&ai), amplitudes(&aj));
        let ls = MultiplierSet::exact(&p, &pi, &pj);
        prop_assume!(ls.is_ok());
        let ls = ls.unwrap();
        let (e_i, e_j) = (p.h().bilinear(&pi, &pi), p.h().bilinear(&pj, &pj));
        let g = functional_gradient(&p, &ai, &aj, &ls).unwrap();
        let h = 1e-6;
        let scale = dot(&g, &g).sqrt().max(1.0);
        for m in 0..2 * na {
            let mut d = vec![0.0; 2 * na];
            let f = |s: f64, d: &mut Vec<f64>| {
                d[m] = s * h;
                let (x, y) = (ai.shifted(&d[..na]).unwrap(), aj.shifted(&d[na..]).unwrap());
                functional_value(&p, &amplitudes(&x), &amplitudes(&y), &ls, e_i, e_j).unwrap()
            };
            let fd = (f(1.0, &mut d) - f(-1.0, &mut d)) / (2.0 * h);
            prop_assert!((g[m] - fd).abs() / scale < 1e-6);
        }
    }
}

#[test]
fn lambda_examples() {
    let (_, p) = setup(ModelSpec::OneQubit, Part::Real);
    assert!((lambda_ij(&PLUS, &MINUS, &p) + 1.0).abs() < 1e-12);
    assert!((lambda_ij(&PLUS, &PLUS, &p) + 2.5).abs() < 1e-12);
    let id = ProblemInstance::new(h_one_qubit(), DenseHermitian::identity(2), Part::Real).unwrap();
    assert!(lambda_ij(&PLUS, &MINUS, &id).abs() < 1e-15);
    // imaginary case: coefficient of i in −⟨φ_i|W_I|φ_j⟩/2
    let (_, q) = setup(ModelSpec::OneQubit, Part::Imaginary);
    assert!((lambda_ij(&PLUS, &MINUS, &q) - 1.0).abs() < 1e-12);
}

#[test]
fn lambda_must_be_minus_one_half() {
    let (_, p) = setup(ModelSpec::OneQubit, Part::Real);
    assert!(p.clone().with_lambda(-0.5).is_ok());
    assert!(p.with_lambda(-0.4).is_err());
}

#[test]
fn unnormalized_constraint_terms() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for part in [Part::Real, Part::Imaginary] {
        let (_, p) = setup(ModelSpec::OneQubit, part);
        for _ in 0..20 {
            let pi = amplitudes(&random_state(&mut rng, 1));
            let pj = amplitudes(&random_state(&mut rng, 1));
            let Ok(ls) = MultiplierSet::exact(&p, &pi, &pj) else { continue };
            let (e_i, e_j) = (0.4, -0.8);
            let base = functional_value(&p, &pi, &pj, &ls, e_i, e_j).unwrap();
            let lam_i: f64 = rng.random_range(-3.0..3.0);
            let lam_j: f64 = rng.random_range(-3.0..3.0);
            assert!((functional_value_unnormalized(&p, &pi, &pj, &ls, e_i, e_j, lam_i, lam_j).unwrap() - base).abs() < 1e-12);
            // doubling φ_i scales the W and φ_i-linear terms and adds 3·lam_i
            let twice: Vec<f64> = pi.iter().map(|x| 2.0 * x).collect();
            let with = functional_value_unnormalized(&p, &twice, &pj, &ls, e_i, e_j, lam_i, 0.0).unwrap();
            let without = functional_value_unnormalized(&p, &twice, &pj, &ls, e_i, e_j, 0.0, 0.0).unwrap();
            assert!((with - without - 3.0 * lam_i).abs() < 1e-12);
        }
    }
}

#[test]
fn unnormalized_multipliers_minimize_their_functional() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for part in [Part::Real, Part::Imaginary] {
        let (model, p) = setup(ModelSpec::OneQubit, part);
        let (pi, pj) = (&model.eigenstates[0], &model.eigenstates[1]);
        let lam = lambda_ij(pi, pj, &p);
        let l = exact_multiplier_unnormalized(&p, pi, pj, Side::I, Nu::B, lam).unwrap();
        let m0 = m_functional_unnormalized(&l, &p, pi, pj, Side::I, lam).unwrap();
        for _ in 0..100 {
            let d: Vec<f64> = l.coeffs.iter().map(|x| x + rng.random_range(-0.5..0.5)).collect();
            assert!(m_functional_unnormalized(&MultiplierVector { coeffs: d, purity: l.purity }, &p, pi, pj, Side::I, lam).unwrap() >= m0);
        }
        let zero = MultiplierVector::zeros(2, part.purity());
        assert_eq!(m_functional_unnormalized(&zero, &p, pi, pj, Side::I, lam).unwrap(), 0.0);
        let probe = MultiplierVector { coeffs: vec![0.3, -0.2], purity: part.purity() };
        let a = m_functional_unnormalized(&probe, &p, pi, pj, Side::I, 0.0).unwrap();
        assert!((a - m_functional(&probe, &p, pi, pj, Side::I).unwrap()).abs() < 1e-14);
    }
}

#[test]
fn unnormalized_gradient_matches_finite_differences_and_vanishes_at_eigenstates() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for part in [Part::Real, Part::Imaginary] {
        let (model, p) = setup(ModelSpec::OneQubit, part);
        for _ in 0..20 {
            let pi: Vec<f64> = (0..2).map(|_| rng.random_range(-1.5..1.5)).collect();
            let pj: Vec<f64> = (0..2).map(|_| rng.random_range(-1.5..1.5)).collect();
            let ls = MultiplierSet::from_b_coeffs(part, vec![0.2, -0.4], vec![0.7, 0.1]);
            let (e_i, e_j) = (rayleigh(&pi, p.h()), rayleigh(&pj, p.h()));
            let (lam_i, lam_j) = (0.3, -1.1);
            let g = functional_gradient_unnormalized(&p, &pi, &pj, &ls, e_i, e_j, lam_i, lam_j).unwrap();
            let h = 1e-6;
            for k in 0..4 {
                let f = |s: f64| {
                    let mut x = pi.clone();
                    let mut y = pj.clone();
                    if k < 2 { x[k] += s * h } else { y[k - 2] += s * h }
                    functional_value_unnormalized(&p, &x, &y, &ls, e_i, e_j, lam_i, lam_j).unwrap()
                };
                assert!((g[k] - (f(1.0) - f(-1.0)) / (2.0 * h)).abs() < 1e-7);
            }
        }
        for a in 0..2 {
            for b in 0..2 {
                let (pi, pj) = (&model.eigenstates[a], &model.eigenstates[b]);
                let lam = lambda_ij(pi, pj, &p);
                let v_i = exact_multiplier_unnormalized(&p, pi, pj, Side::I, Nu::B, lam).unwrap().coeffs;
                let v_j = exact_multiplier_unnormalized(&p, pi, pj, Side::J, Nu::B, lam).unwrap().coeffs;
                let ls = MultiplierSet::from_b_coeffs(part, v_i, v_j);
                let g = functional_gradient_unnormalized(&p, pi, pj, &ls, model.energies[a], model.energies[b], lam, lam).unwrap();
                assert!(g.iter().all(|x| x.abs() < 1e-8));
            }
        }
    }
}

#[test]
fn complex_residue_is_reported_for_mismatched_parts() {
    let model = Model::resolve(&ModelSpec::OneQubit).unwrap();
    let (_, wi) = vme::pauli_algebra::hermitian_split(&model.w).unwrap();
    assert!(ProblemInstance::new(model.hamiltonian.clone(), wi, Part::Real).is_err());
}
