#include <ap_int.h>

// Reverse the bit order of a byte.
void top_module(ap_uint<8> in, ap_uint<8>& out) {
  ap_uint<8> reversed = 0;
  for (int i = 0; i < 8; i++) {
#pragma HLS UNROLL
    reversed = (reversed << 1) | ((in >> i) & 1);
  }
  out = reversed;
}
