"""The fifteen degree combinations for 13 <= v <= 16, as printed."""

PRINTED = """\
v3=5,v4=1,v5=7,f3=13,f4=0,f5=3,v=13,e=27,f=16,n333=0,n334=0,n335=0,n344=0,n345=0,n355=0,n444=0,n445=0,n455=0,n555=5
v3=7,v4=1,v5=5,f3=10,f4=0,f5=4,v=13,e=25,f=14,n333=0,n334=0,n335=0,n344=0,n345=0,n355=1,n444=0,n445=0,n455=0,n555=6
v3=8,v4=1,v5=4,f3=8,f4=1,f5=4,v=13,e=24,f=13,n333=0,n334=0,n335=0,n344=0,n345=0,n355=0,n444=0,n445=0,n455=4,n555=4
v3=8,v4=1,v5=4,f3=8,f4=1,f5=4,v=13,e=24,f=13,n333=0,n334=0,n335=0,n344=0,n345=0,n355=0,n444=0,n445=1,n455=2,n555=5
v3=8,v4=1,v5=4,f3=8,f4=1,f5=4,v=13,e=24,f=13,n333=0,n334=0,n335=0,n344=0,n345=0,n355=0,n444=0,n445=2,n455=0,n555=6
v3=8,v4=1,v5=4,f3=8,f4=1,f5=4,v=13,e=24,f=13,n333=0,n334=0,n335=0,n344=0,n345=0,n355=0,n444=1,n445=0,n455=1,n555=6
v3=5,v4=0,v5=9,f3=15,f4=0,f5=3,v=14,e=30,f=18,n333=0,n334=0,n335=0,n344=0,n345=0,n355=0,n444=0,n445=0,n455=0,n555=5
v3=7,v4=0,v5=7,f3=12,f4=0,f5=4,v=14,e=28,f=16,n333=0,n334=0,n335=0,n344=0,n345=0,n355=1,n444=0,n445=0,n455=0,n555=6
v3=8,v4=0,v5=6,f3=10,f4=1,f5=4,v=14,e=27,f=15,n333=0,n334=0,n335=0,n344=0,n345=0,n355=0,n444=0,n445=0,n455=4,n555=4
v3=8,v4=0,v5=6,f3=10,f4=1,f5=4,v=14,e=27,f=15,n333=0,n334=0,n335=0,n344=0,n345=0,n355=0,n444=0,n445=1,n455=2,n555=5
v3=8,v4=0,v5=6,f3=10,f4=1,f5=4,v=14,e=27,f=15,n333=0,n334=0,n335=0,n344=0,n345=0,n355=0,n444=0,n445=2,n455=0,n555=6
v3=8,v4=0,v5=6,f3=10,f4=1,f5=4,v=14,e=27,f=15,n333=0,n334=0,n335=0,n344=0,n345=0,n355=0,n444=1,n445=0,n455=1,n555=6
v3=9,v4=0,v5=5,f3=9,f4=0,f5=5,v=14,e=26,f=14,n333=0,n334=0,n335=0,n344=0,n345=0,n355=2,n444=0,n445=0,n455=0,n555=7
v3=9,v4=0,v5=5,f3=9,f4=0,f5=5,v=14,e=26,f=14,n333=0,n334=0,n335=1,n344=0,n345=0,n355=0,n444=0,n445=0,n455=0,n555=8
v3=10,v4=0,v5=6,f3=10,f4=0,f5=6,v=16,e=30,f=16,n333=0,n334=0,n335=0,n344=0,n345=0,n355=0,n444=0,n445=0,n455=0,n555=10
"""

LINES = PRINTED.splitlines()
