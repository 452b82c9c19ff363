use frontkit::front::smooth::smooth;
use frontkit::FrontWord;

#[test]
fn dump_clasp_structure() {
    let w: FrontWord = "L1 L1 X2 X1 R2 R1".parse().unwrap();
    let mut map = smooth(&w);
    map.set_outer_dart(None).unwrap();
    println!("n = {}", map.n_crossings());
    for d in 0..map.n_darts() {
        println!(
            "dart {d}: alpha={} over={} outgoing={}",
            map.alpha(d),
            map.is_over(d),
            map.is_outgoing(d)
        );
    }
    for f in map.faces().faces.iter() {
        println!("face {:?}", f.darts);
    }
    println!("over_axis: {:?}", (0..map.n_crossings()).map(|c| map.over_axis(c)).collect::<Vec<_>>());
}
