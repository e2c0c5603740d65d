//! Line-oriented text rendering of reports: one `key value…` record per line,
//! numbers at 12 significant digits.

use std::fmt;

use crate::experiment::{Fig2Summary, MonogamyScenario};
use crate::format::{fmt_list, fmt_sig};
use crate::geometry::{CategoryReport, GeometryReport, IslandReport, MonotoneEntry, OnoReport};
use crate::state::PartySubset;

fn subsets(list: &[PartySubset]) -> String {
    list.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for GeometryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "parties {}", self.parties)?;
        for ((i, j), v) in &self.pair_metric {
            writeln!(f, "pair_metric {i},{j} {}", fmt_sig(*v))?;
        }
        for ((i, j, k), v) in &self.triple_area {
            writeln!(f, "triple_area {i},{j},{k} {}", fmt_sig(*v))?;
        }
        for (s, v) in &self.volumes {
            writeln!(f, "volume {s} {}", fmt_sig(*v))?;
        }
        writeln!(f, "e_raw {}", fmt_sig(self.e_raw))?;
        writeln!(f, "e_normalized {}", fmt_sig(self.e_normalized))
    }
}

impl fmt::Display for IslandReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "queried_subset {}", self.queried_subset)?;
        writeln!(f, "monotone_value {}", fmt_sig(self.monotone_value))?;
        writeln!(f, "is_island {}", self.is_island)?;
        writeln!(f, "epsilon {}", fmt_sig(self.epsilon))?;
        if let Some(p) = &self.partition {
            writeln!(f, "partition {}", subsets(p))?;
        }
        Ok(())
    }
}

fn entry(f: &mut fmt::Formatter<'_>, key: &str, e: &MonotoneEntry) -> fmt::Result {
    let tag = if e.vanishes { "vanishes" } else { "nonzero" };
    writeln!(f, "{key} {} {} {tag}", e.subset, fmt_sig(e.value))
}

impl fmt::Display for CategoryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "parties {}", self.parties)?;
        writeln!(f, "epsilon {}", fmt_sig(self.epsilon))?;
        for e in &self.pairs {
            entry(f, "pair", e)?;
        }
        for e in &self.triples {
            entry(f, "triple", e)?;
        }
        if let Some(b) = &self.blocks {
            writeln!(f, "blocks {}", subsets(b))?;
        }
        if let Some(n) = self.largest_block() {
            writeln!(f, "largest_block {n}")?;
        }
        Ok(())
    }
}

impl fmt::Display for OnoReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "sides {}", fmt_list(&[self.a, self.b, self.c]))?;
        writeln!(f, "area {}", fmt_sig(self.area))?;
        writeln!(f, "brackets {}", fmt_list(&self.brackets))?;
        writeln!(f, "lhs {}", fmt_sig(self.lhs))?;
        writeln!(f, "rhs {}", fmt_sig(self.rhs))?;
        writeln!(f, "holds {}", self.holds)?;
        let forced: Vec<String> = self.forced_zero_brackets.iter().map(|k| k.to_string()).collect();
        writeln!(f, "forced_zero_brackets {}", forced.join(","))
    }
}

impl fmt::Display for MonogamyScenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "coupling {}", fmt_sig(self.coupling))?;
        writeln!(f, "m_ab {}", fmt_sig(self.m_ab))?;
        writeln!(f, "m_ac {}", fmt_sig(self.m_ac))?;
        writeln!(f, "m_bc {}", fmt_sig(self.m_bc))?;
        write!(f, "{}", self.ono)?;
        let cands: Vec<String> = self
            .resolution
            .candidates
            .iter()
            .map(|c| c.map(fmt_sig).unwrap_or_else(|| "none".into()))
            .collect();
        writeln!(f, "ab_candidates {}", cands.join(","))?;
        match self.resolution.forced_ab {
            Some(v) => writeln!(f, "forced_m_ab {}", fmt_sig(v))?,
            None => writeln!(f, "forced_m_ab none")?,
        }
        writeln!(f, "premise_contradictory {}", self.contradictory)
    }
}

impl fmt::Display for Fig2Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rows {}", self.rows)?;
        match self.spearman {
            Some(r) => writeln!(f, "spearman {}", fmt_sig(r)),
            None => writeln!(f, "spearman undefined"),
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::geometry::geometry_report;
    use crate::states::ghz;

    #[test]
    fn ghz_report_text() {
        let text = geometry_report(&ghz(3).unwrap(), None).unwrap().to_string();
        assert!(text.contains("pair_metric 0,1 2.00000000000\n"));
        assert!(text.starts_with("parties 3\n"));
    }
}
