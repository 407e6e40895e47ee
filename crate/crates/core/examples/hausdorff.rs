//! The Hausdorff series `h(X, Y) = log(exp X exp Y) − X − Y` on two basis
//! letters, degree by degree, in the Lyndon basis.

use fatgraph_johnson::algebra::{to_lie_string, Tensor};

fn main() {
    let (genus, n) = (2, 5);
    let x = Tensor::letter(genus, n, 0);
    let y = Tensor::letter(genus, n, genus);
    for d in 2..=n {
        let h = Tensor::hausdorff(&x, &y, d);
        println!("h_{d}(u1, v1) = {}", to_lie_string(&h));
    }
}
