//! Chow rings of Grassmannians and Chern class calculus, enough to compute
//! degrees of loci of cubics via Segre classes.

mod bundle;
mod chow;
mod graded;
mod loci;

pub use bundle::{tautological_bundles, BundleClass};
pub use chow::{ChowClass, ChowRing, GrassContext, Partition};
pub use loci::{
    cone_degree_formula, cone_locus_dimension, degree_cone_locus, degree_intersection_locus,
    degree_intersection_locus_inverse_chern, degree_vanishing_hessian_locus, vanishing_hessian_bundle,
    LocusDegree,
};
