fn main() { let _ = morphclass::probe(); }
