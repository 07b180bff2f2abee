//! Hurwitz series, covers of P̄ and their Rota-Baxter defects.

use rota_baxter::algebra::Algebra;
use rota_baxter::constraint::Constraint;
use rota_baxter::divided_power::DividedPower;
use rota_baxter::hurwitz::{
    check_cover_relation, hmul, rb_defect, required_input_order, CoverOperator, Hurwitz, Series,
};
use rota_baxter::scalar::{int, ratio, ScalarPoly};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = ratio(3, 5);
    let base = DividedPower::quotient(4, w.clone());
    let ring = Hurwitz::new(base.clone(), w.clone());
    let f = Series::parse_literal(&ring, "{0: z1, 1: 2·z0, 3: z2}", |s| base.parse(s))?;
    let g = Series::parse_literal(&ring, "{0: z0 - z3, 2: z1}", |s| base.parse(s))?;
    println!("f = {}", f.render(6));
    println!("g = {}", g.render(6));
    for n in 0..4 {
        println!("(fg)_{n} = {}", hmul(&f, &g, &w, n)?);
    }

    let omegas = [
        Constraint::fftc(),
        Constraint::commutator(),
        Constraint::xy_minus_const(int(5)),
        Constraint::new(ScalarPoly::from_ints(&[0, 1]), ScalarPoly::from_ints(&[1, 0, 1])),
    ];
    for omega in omegas {
        let cover = CoverOperator::new(base.rota_baxter_operator(), omega.clone(), w.clone());
        let q = cover.apply(&f)?;
        println!("\nω = {omega}");
        println!("  Q~(f) = {}", q.render(5));
        println!("  Q~_5 reads f up to index {}", required_input_order(&omega, 5));
        println!("  cover relation to n=8: {}", check_cover_relation(&cover, &f, 8)?.passed());
        let defects: Vec<String> = (0..4)
            .map(|n| rb_defect(&cover, &f, &g, n).map(|d| ring.base().render(&d)))
            .collect::<Result<_, _>>()?;
        println!("  rb defect n=0..3: [{}]", defects.join(", "));
    }
    Ok(())
}
