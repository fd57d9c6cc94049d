//! Builds one member of each graph family and shows its shape, both as
//! built and after complementing.
//!
//! Run with: cargo run --example construct_families

use extremal_spectra::constructions::{
    build_b, build_bb, build_cal_b, BParams, BbParams, BbVariant,
};
use extremal_spectra::graph6;

fn main() -> extremal_spectra::Result<()> {
    // calB(s, t, kappa): complement of a complete bipartite graph plus
    // isolated vertices. Every member has diameter 2.
    let calb = build_cal_b(1, 4, 2)?;
    println!("calB(1,4,2)        {}", graph6::encode(&calb));
    println!("  complement       {}", graph6::encode(&calb.complement()));
    println!("  complement edges {:?}", calb.complement().edges());
    println!("  diameter         {}", calb.diameter()?);

    // B(s, t, kappa): one vertex of the t side is pulled away from the
    // clique side, which stretches the diameter to 3. The complement of
    // B(1, 3, 2) is the double star on six vertices.
    let b = build_b(&BParams::new(1, 3, 2)?);
    println!();
    println!("B(1,3,2)           {}", graph6::encode(&b));
    let bc = b.complement();
    println!("  complement       {}", graph6::encode(&bc));
    println!("  complement degs  {:?}", bc.degree_sequence());
    println!("  diameter         {}", b.diameter()?);

    // BB(n1, n2; kappa) comes in two geometries that agree at kappa = 1
    // and differ from kappa = 2 on. The complement of the join variant is
    // a complete bipartite graph missing a complete bipartite corner; the
    // complement of the matching variant is missing only a matching.
    for variant in [BbVariant::Join, BbVariant::Matching] {
        let bb = build_bb(&BbParams::new(4, 3, 2, variant)?);
        let cc = bb.complement();
        println!();
        println!("BB(4,3;2) {:?}", variant);
        println!("  graph            {}", graph6::encode(&bb));
        println!("  complement       {}", graph6::encode(&cc));
        println!("  complement edges {}", cc.edge_count());
        println!("  bipartition      {:?}", cc.bipartition());
    }

    // Parameter validation names the violated constraint.
    let err = BParams::new(1, 2, 2).unwrap_err();
    println!();
    println!("rejected B(1,2,2): {}", err);
    Ok(())
}
