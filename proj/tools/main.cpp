#include <cstdio>

int main() {
    std::puts("simdiag cli placeholder");
    return 0;
}
