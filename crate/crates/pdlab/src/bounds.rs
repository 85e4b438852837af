//! Lower and upper bounds on the partition dimension.

use std::collections::BTreeMap;

use crate::dist::DistanceMatrix;
use crate::error::Result;
use crate::graph::Graph;
use crate::structure::twin_clique_size;

/// Classical sandwich for a connected graph of order `n >= 3` and diameter
/// `d`: the least `k` with `(d+1)^k >= n` below, `n - d + 1` above. Orders
/// below 3 get the trivial sandwich `(1, n)`.
pub fn chartrand_bounds(g: &Graph, dist: &DistanceMatrix) -> Result<(usize, usize)> {
    let n = g.order();
    if n < 3 {
        return Ok((1, n));
    }
    let d = dist.diameter(g)? as u128;
    let n128 = n as u128;
    let base = d + 1;
    let mut k = 1usize;
    let mut pow = base;
    while pow < n128 {
        pow = pow.saturating_mul(base);
        k += 1;
    }
    let upper = n - d as usize + 1;
    Ok((k, upper))
}

/// Named lower bounds, all valid simultaneously: the Chartrand bound, the
/// largest set of pairwise strong-equivalent vertices (all of which need
/// distinct classes), and the trivial bound of 2 for order >= 2.
pub fn lower_bounds(g: &Graph, dist: &DistanceMatrix) -> Result<BTreeMap<&'static str, usize>> {
    let (chartrand, _) = chartrand_bounds(g, dist)?;
    let mut map = BTreeMap::new();
    map.insert("chartrand", chartrand);
    map.insert("twin_clique", twin_clique_size(dist));
    map.insert("trivial", if g.order() >= 2 { 2 } else { 1 });
    Ok(map)
}

/// Max of the named lower bounds.
pub fn combined_lower_bound(g: &Graph, dist: &DistanceMatrix) -> Result<usize> {
    Ok(*lower_bounds(g, dist)?.values().max().unwrap())
}
