"""Software prefetch for the compiled kernels.

Induced sorting walks the suffix array in order but reads the text at the
positions it finds there; hinting those reads a few entries ahead overlaps
their cache misses instead of paying them one at a time.
"""
from llvmlite import ir
from numba import types
from numba.core import cgutils
from numba.extending import intrinsic

# entries looked ahead; tuned on 2^20..2^22 random bytes
DISTANCE = 32

_I32 = ir.IntType(32)


@intrinsic
def prefetch(typingctx, arr, index):
    """Hint a read of ``arr[index]``; never faults, even out of bounds."""

    def codegen(context, builder, sig, args):
        aryty = sig.args[0]
        ary = context.make_array(aryty)(context, builder, args[0])
        ptr = cgutils.get_item_pointer(context, builder, aryty, ary, [args[1]], wraparound=False)
        if getattr(ptr.type, "is_opaque", False):
            name = "llvm.prefetch.p0"
        else:
            ptr = builder.bitcast(ptr, ir.IntType(8).as_pointer())
            name = "llvm.prefetch.p0i8"
        fnty = ir.FunctionType(ir.VoidType(), [ptr.type, _I32, _I32, _I32])
        fn = cgutils.get_or_insert_function(builder.module, fnty, name)
        # read, high locality, data cache
        builder.call(fn, [ptr, _I32(0), _I32(3), _I32(1)])
        return context.get_dummy_value()

    return types.void(arr, index), codegen
