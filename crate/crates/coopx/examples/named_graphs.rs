//! Tour of the graph catalog: build each named topology and print its
//! degree profile and adjacency structure.
//!
//! Run with: cargo run --example named_graphs

use coopx::error::Result;
use coopx::generators::named_graph;

fn main() -> Result<()> {
    let names = [
        "k23_plus_edge",
        "path(5)",
        "cycle(6)",
        "star(5)",
        "complete(4)",
    ];

    for name in names {
        let g = named_graph(name)?;
        let stats = g.degree_stats();
        println!(
            "{name}: {} vertices, {} edges, degrees {}..{}{}",
            g.n(),
            g.edges().len(),
            stats.min,
            stats.max,
            if stats.is_regular { " (regular)" } else { "" },
        );
        for v in 0..g.n() {
            let nbrs: Vec<String> = g.neighbors(v)?.iter().map(|u| u.to_string()).collect();
            println!("  {v}: {{{}}}", nbrs.join(", "));
        }
        println!();
    }

    // every catalog graph is connected, which the instance layer requires
    for name in names {
        assert!(named_graph(name)?.is_connected());
    }
    println!("all catalog graphs are connected");
    Ok(())
}
