fn main() {
    println!("tkk");
}
