//! Text export of character tables and class functions.
//!
//! The JSON document has the fields `group_order`, `exponent`, `classes` (each with `order`,
//! `size` and `powers`, the class of g^m for 0 <= m < order) and `characters` (each with
//! `degree` and `values`). A value is `{"conductor": M, "coeffs": [c_0, ..., c_{M-1}]}`,
//! meaning sum c_j zeta_M^j with zeta_M = exp(2 pi i / M); M divides the exponent.

use serde::Serialize;

use super::dixon::{CharacterTable, ClassFunction};
use crate::exactnum::CycInt;

#[derive(Serialize)]
struct ValueOut {
    conductor: u32,
    coeffs: Vec<i64>,
}

impl From<&CycInt> for ValueOut {
    fn from(x: &CycInt) -> Self {
        ValueOut {
            conductor: x.conductor(),
            coeffs: x.coeffs().to_vec(),
        }
    }
}

#[derive(Serialize)]
struct ClassOut {
    order: u64,
    size: u64,
    powers: Vec<usize>,
}

#[derive(Serialize)]
struct CharOut {
    degree: u64,
    values: Vec<ValueOut>,
}

#[derive(Serialize)]
struct TableOut {
    group_order: u64,
    exponent: u64,
    classes: Vec<ClassOut>,
    characters: Vec<CharOut>,
}

fn classes(t: &CharacterTable) -> Vec<ClassOut> {
    (0..t.class_sizes.len())
        .map(|c| ClassOut {
            order: t.class_orders[c],
            size: t.class_sizes[c],
            powers: t.powers[c].clone(),
        })
        .collect()
}

pub fn table_to_json(t: &CharacterTable) -> String {
    let out = TableOut {
        group_order: t.group_order,
        exponent: t.exponent,
        classes: classes(t),
        characters: t
            .values
            .iter()
            .zip(&t.degrees)
            .map(|(row, &degree)| CharOut {
                degree,
                values: row.iter().map(ValueOut::from).collect(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&out).expect("serializable")
}

/// Class functions laid out against the classes of `t`, in the table schema.
pub fn functions_to_json(t: &CharacterTable, fs: &[ClassFunction]) -> String {
    let out = TableOut {
        group_order: t.group_order,
        exponent: t.exponent,
        classes: classes(t),
        characters: fs
            .iter()
            .map(|f| CharOut {
                degree: f.values[0].as_integer().unwrap_or(0).max(0) as u64,
                values: f.values.iter().map(ValueOut::from).collect(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&out).expect("serializable")
}
