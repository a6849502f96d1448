use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::Locus;
use crate::apolar::{is_cone, AGAlgebra, JordanType};
use crate::classify::{classify, CubicLabel};
use crate::error::{Error, Result};
use crate::kernel::Rational;
use crate::polyring::{parse_polynomial, Form, ParseError};
use crate::schubert::{
    cone_degree_formula, cone_locus_dimension, degree_cone_locus, degree_intersection_locus,
    degree_vanishing_hessian_locus,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeSection {
    pub is_cone: bool,
    pub vertex_dim: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlpSection {
    pub holds: bool,
    pub witness: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSection {
    pub label: String,
    pub dual_dim: Option<i64>,
    pub stab_dim: Option<usize>,
}

/// Everything `lefschetz analyze` reports about one form. Field names are
/// the JSON keys.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub input: String,
    pub vars: usize,
    pub degree: u32,
    pub hilbert: Vec<usize>,
    pub cone: ConeSection,
    pub hessian_vanishes: bool,
    pub slp: SlpSection,
    pub jordan_type: Vec<usize>,
    pub class: ClassSection,
    pub seed: u64,
    pub version: String,
}

/// One more than the largest variable index in `text`, at least 1.
pub fn infer_vars(text: &str) -> usize {
    let bytes = text.as_bytes();
    let mut best = 0usize;
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'x' {
            let mut j = i + 1;
            if bytes.get(j) == Some(&b'_') {
                j += 1;
            }
            let start = j;
            while j < bytes.len() && bytes[j].is_ascii_digit() {
                j += 1;
            }
            if let Ok(idx) = text[start..j].parse::<usize>() {
                best = best.max(idx + 1);
            }
            i = j.max(i + 1);
        } else {
            i += 1;
        }
    }
    best.max(1)
}

fn parse_form(text: &str, vars: Option<usize>) -> Result<Form> {
    let n = vars.unwrap_or_else(|| infer_vars(text));
    Form::new(parse_polynomial(text, n)?)
}

/// Runs every analysis on one form.
///
/// Forms that are not cubics in five variables get the label UNRECOGNIZED
/// with no dual or stabilizer dimension; the apolar invariants are still
/// reported.
pub fn analyze(text: &str, vars: Option<usize>, seed: u64) -> Result<AnalysisReport> {
    let f = parse_form(text, vars)?;
    let algebra = AGAlgebra::build(&f);
    let cone = is_cone(&f);
    let hessian_vanishes = f.hessian_determinant().is_zero();
    let slp = algebra.has_slp(seed);
    let jordan = algebra.generic_jordan_type(seed)?;
    let class = match classify(&f, seed) {
        Ok(c) => ClassSection {
            label: c.label.as_str().to_string(),
            dual_dim: c.invariants.dual_dim,
            stab_dim: c.invariants.stab_dim,
        },
        Err(Error::NotCubicThreefold { .. }) => {
            ClassSection { label: CubicLabel::Unrecognized.as_str().to_string(), dual_dim: None, stab_dim: None }
        }
        Err(e) => return Err(e),
    };
    Ok(AnalysisReport {
        input: f.to_string(),
        vars: f.nvars(),
        degree: f.degree(),
        hilbert: algebra.hilbert(),
        cone: ConeSection { is_cone: cone.is_cone, vertex_dim: cone.vertex_dim },
        hessian_vanishes,
        slp: SlpSection {
            holds: slp.holds,
            witness: slp.witness.map(|w| w.iter().map(Rational::to_string).collect()),
        },
        jordan_type: jordan.parts().to_vec(),
        class,
        seed,
        version: env!("CARGO_PKG_VERSION").to_string(),
    })
}

impl AnalysisReport {
    /// Human-readable rendering with the same values as the JSON form.
    pub fn render_text(&self) -> String {
        let list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(", ");
        let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
        let mut s = String::new();
        let _ = writeln!(s, "input:            {}", self.input);
        let _ = writeln!(s, "variables:        {}", self.vars);
        let _ = writeln!(s, "degree:           {}", self.degree);
        let _ = writeln!(s, "hilbert:          ({})", list(&self.hilbert));
        let _ = writeln!(s, "cone:             {} (vertex dimension {})", self.cone.is_cone, self.cone.vertex_dim);
        let _ = writeln!(s, "hessian vanishes: {}", self.hessian_vanishes);
        let witness = self.slp.witness.as_ref().map(|w| format!(" (witness {})", w.join(", "))).unwrap_or_default();
        let _ = writeln!(s, "SLP:              {}{witness}", self.slp.holds);
        let jt = JordanType::from_parts(self.jordan_type.clone());
        let _ = writeln!(s, "jordan type:      {jt} [{}]", list(&self.jordan_type));
        let _ = writeln!(s, "class:            {}", self.class.label);
        let _ = writeln!(s, "dual dimension:   {}", opt(self.class.dual_dim.map(|d| d.to_string())));
        let _ = writeln!(s, "stabilizer dim:   {}", opt(self.class.stab_dim.map(|d| d.to_string())));
        let _ = writeln!(s, "seed:             {}", self.seed);
        s
    }
}

/// One row of `lefschetz loci`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LociRow {
    pub locus: String,
    pub dim: usize,
    pub degree: String,
}

pub fn loci_rows(which: Locus, n: usize, d: usize) -> Result<Vec<LociRow>> {
    let row = |locus: String, dim: usize, degree: String| LociRow { locus, dim, degree };
    Ok(match which {
        Locus::Cones => vec![row(format!("C_{n}"), cone_locus_dimension(n, d), degree_cone_locus(n, d)?.to_string())],
        Locus::ConeFormula => {
            let segre = degree_cone_locus(n, d)?;
            let dim = cone_locus_dimension(n, d);
            vec![
                row(format!("C_{n} (segre)"), dim, segre.to_string()),
                row(format!("C_{n} (binomial)"), dim, cone_degree_formula(n, d).to_string()),
            ]
        }
        Locus::VanishingHessian => {
            let l = degree_vanishing_hessian_locus()?;
            vec![row("K".into(), l.dim, l.degree.to_string())]
        }
        Locus::Intersection => {
            let l = degree_intersection_locus()?;
            vec![row("K ∩ C_4".into(), l.dim, l.degree.to_string())]
        }
    })
}

/// Comma-separated rationals.
pub fn parse_element(text: &str) -> Result<Vec<Rational>> {
    let mut offset = 0;
    let mut out = Vec::new();
    for piece in text.split(',') {
        let trimmed = piece.trim();
        let parsed: Option<Rational> = match trimmed.split_once('/') {
            Some((a, b)) => match (a.trim().parse::<num_bigint::BigInt>(), b.trim().parse::<num_bigint::BigInt>()) {
                (Ok(a), Ok(b)) if b != 0.into() => Some(Rational::new(a, b)),
                _ => None,
            },
            None => trimmed.parse::<num_bigint::BigInt>().ok().map(Rational::from_integer),
        };
        match parsed {
            Some(r) => out.push(r),
            None => {
                return Err(ParseError { position: offset, message: format!("invalid coefficient '{trimmed}'") }.into())
            }
        }
        offset += piece.len() + 1;
    }
    Ok(out)
}

/// Jordan type of multiplication by the linear form with coefficients
/// `element`.
pub fn jordan_for_element(expr: &str, vars: Option<usize>, element: &str) -> Result<JordanType> {
    let f = parse_form(expr, vars)?;
    let l = parse_element(element)?;
    if l.len() != f.nvars() {
        return Err(Error::VariableCount { expected: f.nvars(), found: l.len() });
    }
    Ok(AGAlgebra::build(&f).jordan_type(&l))
}
