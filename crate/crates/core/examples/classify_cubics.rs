// Labels the canonical cubic threefolds and a few projective conjugates.

use lefschetz::classify::{canonical_form, classify, random_pgl_conjugate, CanonicalKind};

pub fn run() -> String {
    let mut out = String::new();
    for kind in [CanonicalKind::SecantRnc, CanonicalKind::JoinConics, CanonicalKind::PerazzoS12, CanonicalKind::Fermat] {
        let f = canonical_form(kind).form;
        let c = classify(&f, 0).unwrap();
        out += &format!(
            "{kind:?}: {} (dual dim {:?}, stabilizer dim {:?})\n",
            c.label, c.invariants.dual_dim, c.invariants.stab_dim
        );
        for seed in 1..=2 {
            let g = random_pgl_conjugate(&f, seed);
            out += &format!("  conjugate {seed}: {}\n", classify(&g, seed).unwrap().label);
        }
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
