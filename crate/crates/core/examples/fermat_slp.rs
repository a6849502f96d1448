// A strong Lefschetz element for the Fermat cubic, checked against the
// higher Hessians.

use lefschetz::apolar::AGAlgebra;
use lefschetz::classify::FERMAT;
use lefschetz::polyring::Form;

pub fn run() -> String {
    let f = Form::parse(FERMAT, 5).unwrap();
    let a = AGAlgebra::build(&f);
    let slp = a.has_slp(0);
    let w = slp.witness.expect("Fermat has SLP");
    let mut out = String::new();
    out += &format!("witness: {}\n", w.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "));
    for k in 0..=1 {
        let h = a.higher_hessian(k);
        out += &format!("hess^{k} det = {}, at witness = {}\n", h.symbolic_det, h.evaluate(&w));
    }
    out += &format!("jordan type at witness: {}\n", a.jordan_type(&w));
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
