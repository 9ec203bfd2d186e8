#include <ap_int.h>
#include <hls_stream.h>
// Top-level function for HLS synthesis
void top_module(
ap_uint<11> v_addr, ap_uint<8>& v_data,
bool v_en, bool& v_rdy
) {// ROM definition and initialization
static const ap_uint<8> rom[2048] = {/*Add ROM data here*/};
// Signal management
#pragma HLS PIPELINE II=1
v_rdy = v_en;
if (v_en) {
v_data = rom[v_addr];
}}
