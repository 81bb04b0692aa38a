// Command-line front end; see README.md for usage.
#include <cstdio>

int main() {
    std::puts("frank: not wired up yet");
    return 2;
}
