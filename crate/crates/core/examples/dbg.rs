fn main() {
    use stringlab_core::graph::Graph;
    use stringlab_core::planarity::biconnected_components;
    let c10 = Graph::new(10, (0..10u32).map(|i| (i, (i + 1) % 10))).unwrap();
    println!("bccs: {:?}", biconnected_components(&c10));
    let k4 = Graph::new(4, vec![(0,1),(0,2),(0,3),(1,2),(1,3),(2,3)]).unwrap();
    println!("k4 bccs: {:?}", biconnected_components(&k4));
    let two = Graph::new(5, vec![(0,1),(1,2),(2,0),(2,3),(3,4),(4,2)]).unwrap();
    println!("two blocks: {:?}", biconnected_components(&two));
}
