// Jordan types of multiplication maps, and how they compare in dominance
// order.

use lefschetz::apolar::{AGAlgebra, JordanType};
use lefschetz::kernel::rat;
use lefschetz::polyring::Form;

pub fn run() -> String {
    let a = AGAlgebra::build(&Form::parse("x0^3 + x1^3 + x2^3 + x3^3 + x4^3", 5).unwrap());
    let mut out = String::new();
    let special = a.jordan_type(&[1, 0, 0, 0, 0].map(rat));
    let generic = a.generic_jordan_type(7).unwrap();
    out += &format!("x0: {special}\n");
    out += &format!("generic: {generic}\n");
    out += &format!("generic vs x0: {:?}\n", generic.dominance_cmp(&special));
    let hilbert = JordanType::from_parts(a.hilbert());
    out += &format!("conjugate of hilbert vector: {}\n", hilbert.conjugate());
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
