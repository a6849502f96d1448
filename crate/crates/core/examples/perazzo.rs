// Apolar invariants of the Perazzo cubic: vanishing Hessian without being
// a cone, and the resulting failure of the strong Lefschetz property.

use lefschetz::apolar::{has_vanishing_hessian, is_cone, AGAlgebra};
use lefschetz::polyring::Form;

pub fn run() -> String {
    let f = Form::parse("x0*x3^2 + x1*x3*x4 + x2*x4^2", 5).unwrap();
    let a = AGAlgebra::build(&f);
    let mut out = String::new();
    out += &format!("f = {f}\n");
    out += &format!("cone: {}\n", is_cone(&f).is_cone);
    out += &format!("hessian vanishes: {}\n", has_vanishing_hessian(&f));
    out += &format!("hilbert: {:?}\n", a.hilbert());
    for k in 0..=3 {
        let basis: Vec<String> = a.basis(k).iter().map(|m| m.to_string()).collect();
        out += &format!("A_{k} basis: {}\n", basis.join(" "));
    }
    out += &format!("SLP: {}\n", a.has_slp(0).holds);
    out += &format!("generic jordan type: {}\n", a.generic_jordan_type(0).unwrap());
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
