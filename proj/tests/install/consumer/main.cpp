#include <bezout/linalg.hpp>
#include <bezout/similarity.hpp>

int main() {
    using Z = bezout::Mat<bezout::IntegerRing>;
    const Z a{{0, 1}, {0, 0}};
    const Z b{{0, 0}, {1, 0}};
    const auto w = bezout::similarity_witness(a, b, b);
    return w.w == Z{{0, 1}, {1, 0}} && bezout::det(w.w) == -1 ? 0 : 1;
}
