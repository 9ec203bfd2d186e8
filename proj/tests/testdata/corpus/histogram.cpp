#include <ap_int.h>

// 4-bin histogram of 2-bit symbols.
void top_module(const ap_uint<2> symbols[16], ap_uint<8> bins[4]) {
  for (int b = 0; b < 4; b++) {
    bins[b] = 0;
  }
  for (int i = 0; i < 16; i++) {
#pragma HLS PIPELINE
    bins[symbols[i]] += 1;
  }
}
