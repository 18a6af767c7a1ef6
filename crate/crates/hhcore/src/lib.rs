//! Exact computations with semisimple elements of finite classical groups:
//! finite fields, forms, element classification, character tables, Weil
//! characters and minimal-polynomial degrees.

pub mod chartab;
pub mod classgrp;
pub mod error;
pub mod exactnum;
pub mod linalg;
pub mod minpoly;
pub mod sselem;
pub mod weilchar;

pub use error::{Error, Result};
