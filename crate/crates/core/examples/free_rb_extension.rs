//! The free Rota-Baxter algebra, P_A, and extensions of d to Ш(Ш(k)).

use rota_baxter::algebra::{check_diff_axiom, check_rb_axiom, Algebra, Rationals, Sample};
use rota_baxter::constraint::Constraint;
use rota_baxter::divided_power::DividedPower;
use rota_baxter::free_rb::{vartheta, Extension, FreeRb};
use rota_baxter::scalar::int;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = int(1);
    let k = FreeRb::new(Rationals, w.clone());
    let z1 = k.free_p(&k.one());
    println!("over k: z1·z1 = {}", k.render(&k.mul(&z1, &z1)));

    let base = DividedPower::quotient(3, w.clone());
    let ring = FreeRb::new(base.clone(), w.clone());
    let u = ring.tensor(&[base.z(1), base.element(&[1, 1])]);
    let v = ring.unit_embed(&base.z(2));
    println!("u = {}, v = {}", ring.render(&u), ring.render(&v));
    println!("u·v = {}", ring.render(&ring.mul(&u, &v)));
    println!("ϑ(u) = {}", vartheta(&base.rota_baxter_operator(), &u));

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let pairs: Vec<_> = (0..10).map(|_| (ring.sample(&mut rng), ring.sample(&mut rng))).collect();
    let p = ring.rota_baxter_operator();
    println!("P_A Rota-Baxter on 10 pairs: {}", check_rb_axiom(&p, &w, &pairs)?.passed());

    let full = DividedPower::full(w.clone());
    let over_full = FreeRb::new(full.clone(), w.clone());
    let pairs: Vec<_> = (0..6)
        .map(|_| (over_full.sample(&mut rng), over_full.sample(&mut rng)))
        .collect();
    let omegas = [Constraint::xy(), Constraint::fftc(), Constraint::commutator(), Constraint::xy_minus_const(int(3))];
    for omega in omegas {
        let ext = Extension::new(over_full.clone(), full.derivation(), omega.clone())?;
        let sample = over_full.tensor(&[full.z(2), full.z(1)]);
        let outcome = check_diff_axiom(&ext.as_operator(), &w, &pairs)?;
        println!(
            "ω = {omega}: d~(z2 ⊗ z1) = {}; differential of weight {w}: {}",
            over_full.render(&ext.apply(&sample)),
            outcome.passed()
        );
    }
    match Extension::new(ring, base.rota_baxter_operator(), Constraint::fftc()) {
        Ok(_) => println!("unexpected: P̄ was accepted"),
        Err(e) => println!("extending P̄ is refused: {e}"),
    }
    Ok(())
}
