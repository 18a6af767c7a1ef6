//! Checks minimal polynomial degrees of semisimple elements in cross characteristic
//! representations of small classical groups against the clause structure of the theorem.

pub mod config;
pub mod exceptions;
pub mod fixture;
pub mod lemmas;
pub mod sweep;
pub mod theory;
