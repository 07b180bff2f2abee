//! A plain re-implementation of covers and their Rota-Baxter defect over
//! `Ш(k)/I_m`, used as an oracle for the library's lazy series.
#![allow(dead_code)]

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use rota_baxter::algebra::{Algebra, LinearOperator};
use rota_baxter::constraint::Constraint;
use rota_baxter::divided_power::{DPElement, DividedPower};
use rota_baxter::scalar::{int, pow, Scalar};

pub type Fun = Rc<dyn Fn(usize) -> DPElement>;

fn memo(f: impl Fn(usize) -> DPElement + 'static) -> Fun {
    let cache: RefCell<HashMap<usize, DPElement>> = RefCell::new(HashMap::new());
    Rc::new(move |n| {
        if let Some(v) = cache.borrow().get(&n) {
            return v.clone();
        }
        let v = f(n);
        cache.borrow_mut().insert(n, v.clone());
        v
    })
}

pub fn choose(n: usize, k: usize) -> Scalar {
    (0..k).fold(int(1), |acc, i| acc * int((n - i) as i64) / int((i + 1) as i64))
}

pub fn delta(base: &DividedPower, index: usize, u: DPElement) -> Fun {
    let zero = base.zero();
    Rc::new(move |n| if n == index { u.clone() } else { zero.clone() })
}

pub fn mul(base: &DividedPower, f: &Fun, g: &Fun, w: &Scalar) -> Fun {
    let (base, f, g, w) = (base.clone(), f.clone(), g.clone(), w.clone());
    memo(move |n| {
        let mut acc = base.zero();
        for k in 0..=n {
            for j in 0..=n - k {
                let c = choose(n, k) * choose(n - k, j) * pow(&w, k);
                acc = base.add(&acc, &base.scale(&c, &base.mul(&f(n - j), &g(k + j))));
            }
        }
        acc
    })
}

pub fn combine(base: &DividedPower, parts: Vec<(Scalar, Fun)>) -> Fun {
    let base = base.clone();
    memo(move |n| {
        parts
            .iter()
            .fold(base.zero(), |acc, (c, f)| base.add(&acc, &base.scale(c, &f(n))))
    })
}

/// `C(t, n) = Q̃(∂ᵗ f)_n`.
struct CoverTable {
    base: DividedPower,
    p: LinearOperator<DividedPower>,
    omega: Constraint,
    f: Fun,
    table: RefCell<HashMap<(usize, usize), DPElement>>,
}

impl CoverTable {
    fn get(&self, t: usize, n: usize) -> DPElement {
        if let Some(v) = self.table.borrow().get(&(t, n)) {
            return v.clone();
        }
        let v = if n == 0 {
            self.p.apply(&(self.f)(t))
        } else {
            let mut acc = self.base.zero();
            for (i, a) in self.omega.phi().terms() {
                acc = self.base.add(&acc, &self.base.scale(a, &(self.f)(t + n - 1 + i)));
            }
            for (j, b) in self.omega.psi().terms() {
                acc = self.base.add(&acc, &self.base.scale(b, &self.get(t + j, n - 1)));
            }
            acc
        };
        self.table.borrow_mut().insert((t, n), v.clone());
        v
    }
}

pub fn cover(base: &DividedPower, omega: &Constraint, f: &Fun) -> Fun {
    let t = Rc::new(CoverTable {
        base: base.clone(),
        p: base.rota_baxter_operator(),
        omega: omega.clone(),
        f: f.clone(),
        table: RefCell::new(HashMap::new()),
    });
    Rc::new(move |n| t.get(0, n))
}

/// `Q̃f·Q̃g − Q̃(Q̃f·g) − Q̃(f·Q̃g) − λQ̃(fg)` at index `n`.
pub fn rb_defect(base: &DividedPower, omega: &Constraint, w: &Scalar, f: &Fun, g: &Fun, n: usize) -> DPElement {
    let qf = cover(base, omega, f);
    let qg = cover(base, omega, g);
    let lhs = mul(base, &qf, &qg, w);
    let t1 = cover(base, omega, &mul(base, &qf, g, w));
    let t2 = cover(base, omega, &mul(base, f, &qg, w));
    let t3 = cover(base, omega, &mul(base, f, g, w));
    combine(base, vec![(int(1), lhs), (int(-1), t1), (int(-1), t2), (-w.clone(), t3)])(n)
}
