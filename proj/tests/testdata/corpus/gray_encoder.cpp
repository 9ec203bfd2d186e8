#include <ap_int.h>

// Binary-to-Gray converter.
void top_module(ap_uint<8> binary, ap_uint<8>& gray) {
#pragma HLS INLINE off
  gray = binary ^ (binary >> 1);
}
