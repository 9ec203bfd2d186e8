#include <ap_int.h>

// Unsigned saturating adder.
void top_module(ap_uint<8> a, ap_uint<8> b, ap_uint<8>& sum) {
  const ap_uint<9> wide = a + b;
  if (wide > 255) {
    sum = 255;
  } else {
    sum = wide;
  }
}
