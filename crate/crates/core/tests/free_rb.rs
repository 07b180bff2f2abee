use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rota_baxter::algebra::{check_rb_axiom, Algebra, Rationals, Sample};
use rota_baxter::constraint::Constraint;
use rota_baxter::divided_power::{dp_mul, DPElement, DividedPower};
use rota_baxter::error::Error;
use rota_baxter::free_rb::{
    map_slots, mix_shuffle_mul, monad_mu, outer_unit, vartheta, Extension, FreeRb, FreeRbElement,
};
use rota_baxter::scalar::{int, ratio, Scalar};

type Word = Vec<DPElement>;

/// Every merge path of two words: take from the left, from the right, or
/// both at once with weight λ.
fn merges(base: &DividedPower, w: &Scalar, x: &[DPElement], y: &[DPElement]) -> Vec<(Scalar, Word)> {
    if x.is_empty() || y.is_empty() {
        return vec![(int(1), [x, y].concat())];
    }
    let mut out = Vec::new();
    for (c, rest) in merges(base, w, &x[1..], y) {
        out.push((c, [vec![x[0].clone()], rest].concat()));
    }
    for (c, rest) in merges(base, w, x, &y[1..]) {
        out.push((c, [vec![y[0].clone()], rest].concat()));
    }
    for (c, rest) in merges(base, w, &x[1..], &y[1..]) {
        out.push((c * w, [vec![base.mul(&x[0], &y[0])], rest].concat()));
    }
    out
}

fn oracle_product(ring: &FreeRb<DividedPower>, x: &[DPElement], y: &[DPElement]) -> FreeRbElement<usize> {
    let base = ring.base();
    let head = base.mul(&x[0], &y[0]);
    let mut out = FreeRbElement::zero();
    for (c, tail) in merges(base, ring.weight(), &x[1..], &y[1..]) {
        let slots = [vec![head.clone()], tail].concat();
        out = out.plus(&ring.tensor(&slots).scale(&c));
    }
    out
}

fn sample_word(base: &DividedPower, rng: &mut ChaCha8Rng, len: usize) -> Word {
    (0..len).map(|_| base.sample(rng)).collect()
}

#[test]
fn products_match_merge_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for w in [int(0), int(1), int(-2), ratio(3, 5)] {
        let base = DividedPower::quotient(3, w.clone());
        let ring = FreeRb::new(base.clone(), w.clone());
        for _ in 0..15 {
            let len = rng.gen_range(1..=3);
            let x = sample_word(&base, &mut rng, len);
            let len = rng.gen_range(1..=3);
            let y = sample_word(&base, &mut rng, len);
            let got = mix_shuffle_mul(&ring, &ring, &ring.tensor(&x), &ring.tensor(&y)).unwrap();
            assert_eq!(got, oracle_product(&ring, &x, &y));
        }
    }
}

#[test]
fn carrier_k_recovers_divided_powers() {
    for w in [int(0), int(1), int(-2)] {
        let ring = FreeRb::new(Rationals, w.clone());
        let full = DividedPower::full(w.clone());
        for m in 0..=5 {
            for n in 0..=5 {
                let u = FreeRbElement::word(vec![(); m + 1], int(1));
                let v = FreeRbElement::word(vec![(); n + 1], int(1));
                let got = mix_shuffle_mul(&ring, &ring, &u, &v).unwrap();
                let want = dp_mul(&full.z(m), &full.z(n), &w).unwrap();
                for i in 0..=m + n {
                    assert_eq!(got.coeff(&vec![(); i + 1]), want.coeff(i));
                }
            }
        }
    }
}

#[test]
fn free_operator_is_rota_baxter() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for w in [int(0), int(1), int(-2)] {
        let ring = FreeRb::new(Rationals, w.clone());
        let pairs: Vec<_> = (0..100).map(|_| (ring.sample(&mut rng), ring.sample(&mut rng))).collect();
        assert!(check_rb_axiom(&ring.rota_baxter_operator(), &w, &pairs).unwrap().passed());
        let ring = FreeRb::new(DividedPower::quotient(3, w.clone()), w.clone());
        let pairs: Vec<_> = (0..100).map(|_| (ring.sample(&mut rng), ring.sample(&mut rng))).collect();
        assert!(check_rb_axiom(&ring.rota_baxter_operator(), &w, &pairs).unwrap().passed());
    }
}

#[test]
fn vartheta_by_hand() {
    let w = int(1);
    let base = DividedPower::quotient(4, w.clone());
    let ring = FreeRb::new(base.clone(), w.clone());
    let p = base.rota_baxter_operator();
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..10 {
        let x = sample_word(&base, &mut rng, 3);
        let want = base.mul(&x[0], &p.apply(&base.mul(&x[1], &p.apply(&x[2]))));
        assert_eq!(vartheta(&p, &ring.tensor(&x)), want);
    }
    assert_eq!(vartheta(&p, &ring.unit_embed(&base.z(2))), base.z(2));
}

#[test]
fn monad_unit_and_functor() {
    let w = int(-2);
    let base = DividedPower::quotient(3, w.clone());
    let inner = FreeRb::new(base.clone(), w.clone());
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..10 {
        let u = inner.sample(&mut rng);
        assert_eq!(monad_mu(&inner, &outer_unit(&u)), u);
        let same = map_slots(&inner, &u, |b| base.z(*b));
        assert_eq!(same, u);
    }
}

#[test]
fn extension_restricts_and_preserves_filtration() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for w in [int(0), int(1), int(-2)] {
        let full = DividedPower::full(w.clone());
        let ring = FreeRb::new(full.clone(), w.clone());
        let d = full.derivation();
        for omega in [Constraint::xy(), Constraint::fftc(), Constraint::commutator()] {
            let ext = Extension::new(ring.clone(), d.clone(), omega).unwrap();
            for _ in 0..20 {
                let a = full.sample(&mut rng);
                assert_eq!(ext.apply(&ring.unit_embed(&a)), ring.unit_embed(&d.apply(&a)));
                let u = ring.sample(&mut rng);
                let image = ext.apply(&u);
                assert!(image.degree().unwrap_or(0) <= u.degree().unwrap());
            }
        }
    }
}

#[test]
fn extension_needs_q_of_one_to_vanish() {
    let base = DividedPower::quotient(3, int(0));
    let ring = FreeRb::new(base.clone(), int(0));
    let err = Extension::new(ring, base.rota_baxter_operator(), Constraint::fftc()).unwrap_err();
    assert!(matches!(err, Error::IdentityNotAnnihilated(ref s) if s == "z1"));
}

#[test]
fn mismatched_rings_are_rejected() {
    let a = FreeRb::new(DividedPower::quotient(3, int(0)), int(0));
    let b = FreeRb::new(DividedPower::quotient(3, int(0)), int(1));
    let c = FreeRb::new(DividedPower::quotient(4, int(0)), int(0));
    let u = FreeRbElement::word(vec![0], int(1));
    assert!(matches!(mix_shuffle_mul(&a, &b, &u, &u), Err(Error::WeightMismatch { .. })));
    assert!(matches!(mix_shuffle_mul(&a, &c, &u, &u), Err(Error::CarrierMismatch(_))));
    assert!(FreeRbElement::<usize>::from_terms(vec![(vec![], int(1))]).is_err());
}
