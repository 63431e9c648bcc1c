//! File interchange: versioned JSON for graphs, instances, and schedules,
//! plus the CSV audit trace.
//!
//! Every JSON document carries `"format": "coopx-v1"`. Instance files hold
//! the graph (`n`, `edges`), the packet count `k`, per-vertex `holdings`,
//! and optionally a construction `tag`; graph-only files omit `k` and
//! `holdings`. Schedule files hold the field modulus, the rounds, and an
//! optional provenance note. Readers re-validate everything through the
//! ordinary constructors, so a hand-edited file cannot smuggle in a state
//! the library would refuse to build.

use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{Instance, Tag};
use crate::scheduler::{Broadcast, Schedule};
use crate::simulator::TraceRow;

pub const FORMAT: &str = "coopx-v1";

#[derive(Serialize, Deserialize)]
struct InstanceFile {
    format: Option<String>,
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    holdings: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tag: Option<Tag>,
}

#[derive(Serialize, Deserialize)]
struct ScheduleFile {
    format: Option<String>,
    q: u32,
    rounds: Vec<Broadcast>,
    #[serde(skip_serializing_if = "Option::is_none")]
    provenance: Option<String>,
}

fn read_to_string(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_string(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn check_format(format: &Option<String>) -> Result<()> {
    match format.as_deref() {
        Some(FORMAT) => Ok(()),
        Some(other) => Err(Error::UnsupportedFormat {
            found: other.to_string(),
        }),
        None => Err(Error::UnsupportedFormat {
            found: "(missing format field)".to_string(),
        }),
    }
}

fn to_pretty_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

/// Serialize a full instance to coopx-v1 JSON text.
pub fn instance_to_json(inst: &Instance) -> Result<String> {
    let file = InstanceFile {
        format: Some(FORMAT.to_string()),
        n: inst.n(),
        edges: inst.graph().edges().to_vec(),
        k: Some(inst.k()),
        holdings: Some(
            inst.holdings()
                .iter()
                .map(|h| h.iter().copied().collect())
                .collect(),
        ),
        tag: inst.tag(),
    };
    to_pretty_json(&file)
}

/// Serialize a graph-only document.
pub fn graph_to_json(g: &Graph) -> Result<String> {
    let file = InstanceFile {
        format: Some(FORMAT.to_string()),
        n: g.n(),
        edges: g.edges().to_vec(),
        k: None,
        holdings: None,
        tag: None,
    };
    to_pretty_json(&file)
}

/// Parse an instance document, re-running all construction validation.
pub fn instance_from_json(text: &str) -> Result<Instance> {
    let file: InstanceFile = serde_json::from_str(text)?;
    check_format(&file.format)?;
    let graph = Graph::new(file.n, &file.edges)?;
    let (Some(k), Some(holdings)) = (file.k, file.holdings) else {
        return Err(Error::BadFile(
            "file is graph-only (no k/holdings); an instance is required".into(),
        ));
    };
    let holdings: Vec<BTreeSet<usize>> = holdings
        .into_iter()
        .map(|h| h.into_iter().collect())
        .collect();
    let inst = Instance::new(graph, k, holdings)?;
    Ok(match file.tag {
        Some(tag) => inst.with_tag(tag),
        None => inst,
    })
}

/// Parse the graph part of any coopx-v1 document (instance or graph-only).
pub fn graph_from_json(text: &str) -> Result<Graph> {
    let file: InstanceFile = serde_json::from_str(text)?;
    check_format(&file.format)?;
    Graph::new(file.n, &file.edges)
}

/// Does this document carry holdings (i.e. parse as a full instance)?
pub fn json_is_instance(text: &str) -> Result<bool> {
    let file: InstanceFile = serde_json::from_str(text)?;
    check_format(&file.format)?;
    Ok(file.k.is_some() && file.holdings.is_some())
}

pub fn schedule_to_json(schedule: &Schedule) -> Result<String> {
    let file = ScheduleFile {
        format: Some(FORMAT.to_string()),
        q: schedule.q,
        rounds: schedule.rounds.clone(),
        provenance: schedule.provenance.clone(),
    };
    to_pretty_json(&file)
}

pub fn schedule_from_json(text: &str) -> Result<Schedule> {
    let file: ScheduleFile = serde_json::from_str(text)?;
    check_format(&file.format)?;
    Ok(Schedule {
        q: file.q,
        rounds: file.rounds,
        provenance: file.provenance,
    })
}

pub fn read_instance(path: impl AsRef<Path>) -> Result<Instance> {
    instance_from_json(&read_to_string(path.as_ref())?)
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<Graph> {
    graph_from_json(&read_to_string(path.as_ref())?)
}

pub fn write_instance(path: impl AsRef<Path>, inst: &Instance) -> Result<()> {
    write_string(path.as_ref(), &instance_to_json(inst)?)
}

pub fn write_graph(path: impl AsRef<Path>, g: &Graph) -> Result<()> {
    write_string(path.as_ref(), &graph_to_json(g)?)
}

pub fn read_schedule(path: impl AsRef<Path>) -> Result<Schedule> {
    schedule_from_json(&read_to_string(path.as_ref())?)
}

pub fn write_schedule(path: impl AsRef<Path>, schedule: &Schedule) -> Result<()> {
    write_string(path.as_ref(), &schedule_to_json(schedule)?)
}

/// Render a simulation trace as CSV: `round,sender,rank_0,…,rank_{n-1}`.
/// The initial row (round zero) has an empty sender cell.
pub fn trace_to_csv(trace: &[TraceRow]) -> String {
    let n = trace.first().map_or(0, |row| row.ranks.len());
    let mut out = String::from("round,sender");
    for v in 0..n {
        out.push_str(&format!(",rank_{v}"));
    }
    out.push('\n');
    for row in trace {
        out.push_str(&row.round.to_string());
        out.push(',');
        if let Some(s) = row.sender {
            out.push_str(&s.to_string());
        }
        for r in &row.ranks {
            out.push_str(&format!(",{r}"));
        }
        out.push('\n');
    }
    out
}

pub fn write_trace_csv(path: impl AsRef<Path>, trace: &[TraceRow]) -> Result<()> {
    write_string(path.as_ref(), &trace_to_csv(trace))
}

/// Write arbitrary text (reports, sweeps) with uniform error wrapping.
pub fn write_text(path: impl AsRef<Path>, text: &str) -> Result<()> {
    write_string(path.as_ref(), text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{counterexample_instance, named_graph};
    use crate::scheduler::counterexample_schedule;
    use crate::simulator::simulate;

    #[test]
    fn instance_round_trip_preserves_everything() {
        let inst = counterexample_instance(2, 3).unwrap();
        let text = instance_to_json(&inst).unwrap();
        let back = instance_from_json(&text).unwrap();
        assert_eq!(back, inst);
        assert!(json_is_instance(&text).unwrap());
    }

    #[test]
    fn graph_only_round_trip() {
        let g = named_graph("k23_plus_edge").unwrap();
        let text = graph_to_json(&g).unwrap();
        assert!(!json_is_instance(&text).unwrap());
        let back = graph_from_json(&text).unwrap();
        assert_eq!(back.edges(), g.edges());
        // asking for an instance from a graph-only file is a clean error
        assert!(matches!(instance_from_json(&text), Err(Error::BadFile(_))));
    }

    #[test]
    fn format_field_is_enforced() {
        let text = r#"{"n": 2, "edges": [[0, 1]]}"#;
        assert!(matches!(
            graph_from_json(text),
            Err(Error::UnsupportedFormat { .. })
        ));
        let text = r#"{"format": "coopx-v2", "n": 2, "edges": [[0, 1]]}"#;
        assert!(matches!(
            graph_from_json(text),
            Err(Error::UnsupportedFormat { found }) if found == "coopx-v2"
        ));
    }

    #[test]
    fn loading_revalidates_the_instance() {
        // holdings reference a packet outside 0..k
        let text = r#"{
            "format": "coopx-v1",
            "n": 2, "edges": [[0, 1]],
            "k": 1, "holdings": [[0], [7]]
        }"#;
        assert!(matches!(
            instance_from_json(text),
            Err(Error::PacketOutOfRange { .. })
        ));
    }

    #[test]
    fn schedule_round_trip_and_trace_rendering() {
        let inst = counterexample_instance(1, 2).unwrap();
        let schedule = counterexample_schedule(&inst).unwrap();
        let text = schedule_to_json(&schedule).unwrap();
        let back = schedule_from_json(&text).unwrap();
        assert_eq!(back, schedule);

        let trace = simulate(&inst, &back).unwrap();
        let csv = trace_to_csv(&trace);
        let mut lines = csv.lines();
        assert_eq!(
            lines.next(),
            Some("round,sender,rank_0,rank_1,rank_2,rank_3")
        );
        assert_eq!(lines.next(), Some("0,,1,1,2,0"));
        // header, the initial row, then one line per round
        assert_eq!(csv.lines().count(), 2 + schedule.len());
        assert!(csv.ends_with('\n'));
    }
}
