use std::fmt::Write;

use chorddia::{asymptotic_lower, cyclic_count, dihedral_count, BigCount, BoundKind};
use serde::{Deserialize, Serialize};

pub const CSV_HEADER: &str = "n,c_n,floor_c_lower,d_n,floor_d_lower";

/// One row of the growth table. Counts serialize as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRecord {
    pub n: u64,
    #[serde(with = "decimal")]
    pub c_n: BigCount,
    #[serde(with = "decimal")]
    pub floor_c_lower: BigCount,
    #[serde(with = "decimal")]
    pub d_n: BigCount,
    #[serde(with = "decimal")]
    pub floor_d_lower: BigCount,
}

impl CountRecord {
    pub fn compute(n: u64) -> chorddia::Result<Self> {
        Ok(CountRecord {
            n,
            c_n: cyclic_count(n)?,
            floor_c_lower: asymptotic_lower(BoundKind::Cyclic, n)?.exact_floor,
            d_n: dihedral_count(n)?,
            floor_d_lower: asymptotic_lower(BoundKind::Dihedral, n)?.exact_floor,
        })
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.n, self.c_n, self.floor_c_lower, self.d_n, self.floor_d_lower
        )
    }

    pub fn parse_csv_row(line: &str) -> Option<Self> {
        let fields: Vec<&str> = line.trim_end_matches('\r').split(',').collect();
        let [n, c, fc, d, fd] = fields.as_slice() else {
            return None;
        };
        Some(CountRecord {
            n: n.parse().ok()?,
            c_n: c.parse().ok()?,
            floor_c_lower: fc.parse().ok()?,
            d_n: d.parse().ok()?,
            floor_d_lower: fd.parse().ok()?,
        })
    }
}

pub fn to_csv(records: &[CountRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        let _ = writeln!(out, "{}", r.csv_row());
    }
    out
}

mod decimal {
    use chorddia::BigCount;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &BigCount, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigCount, D::Error> {
        let raw = String::deserialize(d)?;
        raw.parse().map_err(D::Error::custom)
    }
}
