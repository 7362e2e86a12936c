class A{
    class B extends C{
    }
}
class C extends A{
}
