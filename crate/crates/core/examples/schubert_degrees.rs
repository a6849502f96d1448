// Degrees of loci of cubic threefolds, computed on Grassmannians.

use lefschetz::schubert::{
    cone_degree_formula, degree_cone_locus, degree_intersection_locus, degree_vanishing_hessian_locus,
    tautological_bundles, ChowClass, GrassContext, Partition,
};

pub fn run() -> String {
    let mut out = String::new();
    let g24 = GrassContext::new(2, 4).unwrap();
    let s1 = ChowClass::schubert_class(g24, &Partition::new(vec![1])).unwrap();
    out += &format!("lines meeting 4 lines in P3: {}\n", s1.pow(4).integral());
    let (_, q) = tautological_bundles(g24);
    out += &format!("c(Q) on G(2,4): {}\n", q.total_chern());
    out += &format!("cones: {} (binomial {})\n", degree_cone_locus(4, 3).unwrap(), cone_degree_formula(4, 3));
    let k = degree_vanishing_hessian_locus().unwrap();
    out += &format!("vanishing hessian: dim {}, degree {}\n", k.dim, k.degree);
    let i = degree_intersection_locus().unwrap();
    out += &format!("vanishing hessian cones: dim {}, degree {}\n", i.dim, i.degree);
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
