#include <ap_int.h>

// Block interleaver writing rows and reading columns.
void top_module(const ap_uint<8> in[16], ap_uint<8> out[16]) {
  for (int row = 0; row < 4; row++) {
    for (int col = 0; col < 4; col++) {
#pragma HLS PIPELINE
      out[col * 4 + row] = in[row * 4 + col];
    }
  }
}
