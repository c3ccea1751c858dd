use platforge::algebra::{charpoly, IntMatrix, LaurentMatrix, Poly};
use platforge::braid::{family_tilde, BraidWord};
use platforge::dynamics::{
    burau_at, burau_reduced, homological_dilatation, is_symplectic, mapping_torus_homology, scaling_scan,
    symplectic_action, twist_word,
};
use platforge::sample::Sampler;

const SEED: u64 = 97;

#[test]
fn burau_is_a_homomorphism() {
    let mut s = Sampler::new(SEED);
    for _ in 0..60 {
        let n = s.rng_range(2, 6);
        let (a, b) = (s.braid(n, 8), s.braid(n, 8));
        let ab = burau_reduced(&a.concat(&b).unwrap());
        assert_eq!(ab, burau_reduced(&a).mul(&burau_reduced(&b)).unwrap());
        let inv = burau_reduced(&a).mul(&burau_reduced(&a.inverse())).unwrap();
        assert_eq!(inv, LaurentMatrix::identity(n - 1));
    }
}

#[test]
fn burau_spectrum_contains_the_symplectic_one() {
    let mut s = Sampler::new(SEED + 1);
    let x_minus_1 = Poly::from_i64(&[-1, 1]);
    for _ in 0..60 {
        let g = s.rng_range(1, 4);
        let b = s.braid(2 * g + 2, 16);
        let burau = charpoly(&burau_at(&b, -1).unwrap()).unwrap();
        let symp = charpoly(&symplectic_action(&b).unwrap()).unwrap();
        assert_eq!(burau, &x_minus_1 * &symp, "{b}");
    }
}

#[test]
fn symplectic_and_torus() {
    let mut s = Sampler::new(SEED + 2);
    for _ in 0..60 {
        let g = s.rng_range(1, 5);
        let b = s.braid(2 * g + 2, 20);
        let m = symplectic_action(&b).unwrap();
        assert!(is_symplectic(&m));
        assert_eq!(m.det().unwrap(), 1.into());
        let h = mapping_torus_homology(&b).unwrap();
        assert!(h.rank() >= 1);
        assert_eq!(twist_word(&b).unwrap().len(), b.len());
    }
}

#[test]
fn dilatation_is_a_conjugacy_invariant() {
    let mut s = Sampler::new(SEED + 3);
    for _ in 0..25 {
        let n = 2 * s.rng_range(2, 4);
        let b = s.braid(n, 12);
        let x = BraidWord::new(n, [s.letter(n)]).unwrap();
        let c = x.concat(&b).unwrap().concat(&x.inverse()).unwrap();
        let (l, m) = (homological_dilatation(&b).unwrap(), homological_dilatation(&c).unwrap());
        assert!(l >= 1.0);
        assert!((l - m).abs() <= 1e-11 * l, "{b}: {l} vs {m}");
    }
}

#[test]
fn family_torus_has_rank_one() {
    for g in 2..=10 {
        let b = family_tilde(g).unwrap();
        let a = symplectic_action(&b).unwrap();
        let fixed = a.sub(&IntMatrix::identity(2 * g)).unwrap().det().unwrap();
        let h = mapping_torus_homology(&b).unwrap();
        if fixed != 0.into() {
            assert_eq!(h.rank(), 1, "g = {g}");
            assert_eq!(h.order(), None);
        }
    }
}

#[test]
fn scan_rows_are_consistent() {
    let r = scaling_scan(2, 12).unwrap();
    for row in &r.rows {
        assert!(row.lambda_hom > 1.0 && row.g_log_lambda > 0.0);
        assert!((row.g_log_lambda - row.g as f64 * row.lambda_hom.ln()).abs() < 1e-12);
        assert!(row.lambda_lower <= row.lambda_hom && row.lambda_hom <= row.lambda_upper);
    }
}
