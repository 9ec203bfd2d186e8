#include <ap_int.h>

// Population count over a 16-bit word.
void top_module(ap_uint<16> word, ap_uint<5>& ones) {
  ap_uint<5> count = 0;
  ap_uint<16> rest = word;
  while (rest != 0) {
    count += rest & 1;
    rest = rest >> 1;
  }
  ones = count;
}
