// Parsing forms and operators, and applying an operator by differentiation.

use lefschetz::polyring::{gradient, parse_operator, Form};

pub fn run() -> String {
    let mut out = String::new();
    let f = Form::parse("1/2*x_0^2*x1 + x1*x0*x0 - 3/2 * x0^2*x1 + x1^3", 2).unwrap();
    out += &format!("normalized: {f}\n");
    let g = Form::parse("x0*x3^2 + x1*x3*x4 + x2*x4^2", 5).unwrap();
    let partials: Vec<String> = gradient(&g).iter().map(|p| p.to_string()).collect();
    out += &format!("gradient: {}\n", partials.join(", "));
    let op = parse_operator("X3*X4", 5).unwrap();
    out += &format!("X3*X4 applied: {}\n", op.apply(g.poly()));
    match Form::parse("x0^2 + x1", 2) {
        Ok(_) => out += "unexpected: inhomogeneous input accepted\n",
        Err(e) => out += &format!("error: {e}\n"),
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
