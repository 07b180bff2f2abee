//! Products in the divided power algebra and its quotients, and the
//! operators P and d.

use rota_baxter::algebra::{check_diff_axiom, check_rb_axiom, Algebra};
use rota_baxter::divided_power::DividedPower;
use rota_baxter::scalar::{int, ratio};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for w in [int(0), int(1), ratio(3, 5)] {
        let dp = DividedPower::full(w.clone());
        println!("weight {w}");
        for (m, n) in [(1, 1), (2, 3), (3, 3)] {
            let prod = dp.mul(&dp.z(m), &dp.z(n));
            println!("  z{m}·z{n} = {prod}");
        }
    }

    let q = DividedPower::quotient(3, int(0));
    let u = q.parse("2·z0 - z1")?;
    let v = q.parse("z1 + 1/2·z2")?;
    println!("\nin {}: ({u})·({v}) = {}", q.describe(), q.mul(&u, &v));

    let p = q.rota_baxter_operator();
    let pairs = vec![(u.clone(), v.clone()), (v.clone(), v.clone())];
    println!("P̄ Rota-Baxter: {}", check_rb_axiom(&p, &int(0), &pairs)?.passed());

    let d = q.derivation();
    let outcome = check_diff_axiom(&d, &int(0), &[(q.z(2), q.z(1))])?;
    match outcome.witness() {
        Some(w) => println!("d on the quotient is not a derivation: defect {}", w.defect),
        None => println!("d passed on the quotient"),
    }
    let full = DividedPower::full(int(0));
    let outcome = check_diff_axiom(&full.derivation(), &int(0), &[(full.z(2), full.z(1))])?;
    println!("d on the full algebra: {}", outcome.passed());
    Ok(())
}
