pub mod braid;
pub mod conj;
pub mod fixtures;
pub mod hmod;
pub mod hopf;
pub mod inner;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod shell;
pub mod staralg;
