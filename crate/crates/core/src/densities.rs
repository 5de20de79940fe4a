pub struct Law<T> { _t: std::marker::PhantomData<T> }
