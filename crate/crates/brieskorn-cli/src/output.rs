//! Renderers: per-record text blocks, JSON lines, CSV rows, and the
//! census table rebuilt from serialized records.

use std::collections::BTreeMap;
use std::io::Write;

use brieskorn::{CensusRow, CensusTable};

use crate::record::{RecordDto, TopologyDto};
use crate::CliError;

pub fn write_text(w: &mut impl Write, dto: &RecordDto) -> std::io::Result<()> {
    let a = dto
        .a
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",");
    writeln!(w, "a=({a}) dim={}", dto.dim)?;
    match &dto.topology {
        TopologyDto::NotSphere { .. } => writeln!(w, "class=not_sphere")?,
        TopologyDto::BpIndex {
            tau,
            group_order,
            label,
            ..
        } => writeln!(w, "class={label} order={group_order} tau={tau}")?,
        TopologyDto::Kervaire { bp_group, .. } => {
            let key = dto.class_key().expect("kervaire is a sphere");
            writeln!(w, "class={key} bp_group={bp_group}")?;
        }
    }
    let c = &dto.certificate;
    let pass = |p: bool| if p { "pass" } else { "fail" };
    writeln!(w, "fano={} margin={}", pass(c.fano.passes), c.fano.margin)?;
    writeln!(
        w,
        "klt={} sum={} bound={}",
        pass(c.klt.passes),
        c.klt.sum,
        c.klt.bound
    )?;
    writeln!(
        w,
        "uniqueness={} excess={} threshold={}",
        pass(c.uniqueness.passes),
        c.uniqueness.excess,
        c.uniqueness.threshold
    )?;
    if let Some(m) = &c.moduli {
        let clamp = if m.clamped { " (clamped)" } else { "" };
        writeln!(w, "moduli_real_dim={}{clamp}", m.real_dim)?;
    }
    let verdict = if c.fano.passes && c.klt.passes {
        "certified"
    } else {
        "not_certified"
    };
    writeln!(w, "einstein={verdict}")
}

pub fn write_json_lines(w: &mut impl Write, dtos: &[RecordDto]) -> Result<(), CliError> {
    for dto in dtos {
        serde_json::to_writer(&mut *w, dto)?;
        writeln!(w)?;
    }
    Ok(())
}

pub fn write_csv(w: &mut impl Write, dtos: &[RecordDto]) -> Result<(), CliError> {
    let mut csv = csv::Writer::from_writer(w);
    csv.write_record(RecordDto::CSV_HEADER)?;
    for dto in dtos {
        csv.write_record(dto.csv_row())?;
    }
    csv.flush()?;
    Ok(())
}

/// Rebuild the census table from serialized records (used when the
/// records come from the cache rather than a fresh run).
pub fn table_from_dtos(link_dimension: u32, dtos: &[RecordDto]) -> CensusTable {
    let mut rows: BTreeMap<_, CensusRow> = BTreeMap::new();
    for dto in dtos {
        let Some(key) = dto.class_key() else { continue };
        let row = rows.entry(key).or_default();
        row.count += 1;
        if let Some(dim) = dto.moduli_real_dim() {
            if row.max_real_moduli.as_ref().is_none_or(|m| *m < dim) {
                row.max_real_moduli = Some(dim);
            }
        }
    }
    CensusTable {
        link_dimension,
        total: dtos.len() as u64,
        rows,
    }
}
