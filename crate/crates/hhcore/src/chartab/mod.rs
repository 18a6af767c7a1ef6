//! Element enumeration, conjugacy classes and exact character tables of small matrix groups.

pub mod conj;
pub mod dixon;
pub mod enumerate;
pub mod export;

pub use conj::{conjugacy, ConjData};
pub use dixon::{
    class_constants, dixon_table, restrict_to_subgroup, CharacterTable, ClassFunction,
    DixonOptions, Exec,
};
pub use enumerate::{enumerate, Codec, GroupEnum, Key};
pub use export::{functions_to_json, table_to_json};

use crate::classgrp::{generators, GroupSpec};
use crate::error::Result;

/// Default element cap for enumeration.
pub const DEFAULT_CAP: usize = 2_000_000;

/// Enumerate a classical group from its standard generators.
pub fn enumerate_group(g: &GroupSpec, cap: usize) -> Result<GroupEnum> {
    enumerate(g.field(), &generators(g), cap)
}
